use serde::Serialize;

/// Outcome of one named check, with a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Verdict {
    pub fn pass(name: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            pass: true,
            witness: None,
            detail: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Verdict {
            name: name.into(),
            pass: false,
            witness: Some(witness.into()),
            detail: None,
        }
    }

    pub fn from_witness(name: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Verdict::pass(name),
            Some(w) => Verdict::fail(name, w),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Conjunction; keeps the first witness.
    pub fn and(self, other: Verdict) -> Verdict {
        if self.pass {
            Verdict {
                name: self.name,
                pass: other.pass,
                witness: other.witness,
                detail: self.detail.or(other.detail),
            }
        } else {
            self
        }
    }
}
