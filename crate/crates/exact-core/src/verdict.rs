use std::fmt;

/// Outcome of an exact-equality check, with the first failing item if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Verdict { name: name.into(), passed: true, detail: detail.into() }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Verdict { name: name.into(), passed: false, detail: detail.into() }
    }

    /// Combines several checks; passes iff all pass, reporting the first failure.
    pub fn all(name: impl Into<String>, parts: Vec<Verdict>) -> Self {
        let name = name.into();
        match parts.iter().find(|v| !v.passed) {
            Some(bad) => Verdict::fail(name, format!("{}: {}", bad.name, bad.detail)),
            None => Verdict::pass(name, format!("{} checks", parts.len())),
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            write!(f, "{tag} {}", self.name)
        } else {
            write!(f, "{tag} {} ({})", self.name, self.detail)
        }
    }
}
