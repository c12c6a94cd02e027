//! Verification reports and their two text forms.

use std::fmt::Write as _;

/// One named check with the identity it tests and its failing witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub statement: String,
    pub pass: bool,
    pub witnesses: Vec<String>,
}

impl Check {
    pub fn new(name: &str, statement: &str, witnesses: Vec<String>) -> Self {
        Check {
            name: name.into(),
            statement: statement.into(),
            pass: witnesses.is_empty(),
            witnesses,
        }
    }

    /// A yes/no check without witnesses of its own.
    pub fn flag(name: &str, statement: &str, pass: bool) -> Self {
        Check {
            name: name.into(),
            statement: statement.into(),
            pass,
            witnesses: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Human,
    #[default]
    Machine,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "human" => Ok(Format::Human),
            "machine" => Ok(Format::Machine),
            other => Err(format!("unknown format `{other}` (human, machine)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub command: String,
    pub checks: Vec<Check>,
    /// `key=value` facts: coefficients, flags, sizes.
    pub data: Vec<(String, String)>,
    /// Free lines such as `H0=2 H1=2 H2=2`.
    pub lines: Vec<String>,
    /// SHA-256 of the input text.
    pub digest: String,
    pub seed: u64,
}

impl Report {
    pub fn new(command: &str, digest: &str, seed: u64) -> Self {
        Report {
            command: command.into(),
            checks: Vec::new(),
            data: Vec::new(),
            lines: Vec::new(),
            digest: digest.into(),
            seed,
        }
    }

    pub fn check(&mut self, c: Check) -> bool {
        let pass = c.pass;
        self.checks.push(c);
        pass
    }

    pub fn datum(&mut self, key: impl Into<String>, value: impl ToString) {
        self.data.push((key.into(), value.to_string()));
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Machine => self.machine(),
            Format::Human => self.human(),
        }
    }

    fn machine(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command={}", self.command);
        let _ = writeln!(out, "input_sha256={}", self.digest);
        let _ = writeln!(out, "seed={}", self.seed);
        for c in &self.checks {
            let _ = writeln!(out, "check={} pass={} witnesses={}", c.name, c.pass, c.witnesses.len());
            for w in &c.witnesses {
                let _ = writeln!(out, "witness[{}]={w}", c.name);
            }
        }
        for (k, v) in &self.data {
            let _ = writeln!(out, "{k}={v}");
        }
        for l in &self.lines {
            let _ = writeln!(out, "{l}");
        }
        let _ = writeln!(out, "pass={}", self.pass());
        out
    }

    fn human(&self) -> String {
        const SHOWN: usize = 8;
        let mut out = String::new();
        let _ = writeln!(out, "rbsys {}  (input sha256 {}, seed {})", self.command, &self.digest, self.seed);
        for c in &self.checks {
            let tag = if c.pass { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "[{tag}] {}: {}", c.name, c.statement);
            for w in c.witnesses.iter().take(SHOWN) {
                let _ = writeln!(out, "         {w}");
            }
            if c.witnesses.len() > SHOWN {
                let _ = writeln!(out, "         … {} more", c.witnesses.len() - SHOWN);
            }
        }
        if !self.data.is_empty() {
            let _ = writeln!(out);
            let width = self.data.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
            for (k, v) in &self.data {
                let _ = writeln!(out, "  {k:<width$}  {v}");
            }
        }
        for l in &self.lines {
            let _ = writeln!(out, "  {l}");
        }
        let _ = writeln!(out, "{}", if self.pass() { "all checks pass" } else { "some checks FAIL" });
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_lines() {
        let mut r = Report::new("check-rbs", "ab", 0);
        r.check(Check::new("grbs", "", vec!["defect_R[e,e] = -1/1".into()]));
        let text = r.emit(Format::Machine);
        assert!(text.contains("witness[grbs]=defect_R[e,e] = -1/1"));
        assert!(text.ends_with("pass=false\n"));
        let ok = Report::new("validate", "ab", 0).emit(Format::Machine);
        assert!(ok.contains("pass=true"));
    }
}
