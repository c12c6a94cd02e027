use super::scalar::{self, Scalar};

/// Sign of the term where an operation of arity `i` is inserted at slot
/// `lambda` (1-based) of the strongly homotopy identities:
/// `(-1)^(lambda (i+1) + i (|a_1| + … + |a_{lambda-1}|))`.
///
/// `degrees` lists the degrees of the outer arguments in order; only the
/// first `lambda - 1` are read.
pub fn koszul_sign(degrees: &[i64], lambda: usize, i: usize) -> Scalar {
    scalar::sign(koszul_exponent(degrees, lambda, i))
}

pub fn koszul_exponent(degrees: &[i64], lambda: usize, i: usize) -> i64 {
    assert!(lambda >= 1, "slots are 1-based");
    let before: i64 = degrees.iter().take(lambda - 1).sum();
    let (l, i) = (lambda as i64, i as i64);
    l * (i + 1) + i * before
}
