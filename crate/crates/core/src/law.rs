//! Law verdicts and the exhaustive instance driver shared by every checker.

use serde::{Deserialize, Serialize};

/// Verdict for one law (or one family of laws) on one structure.
///
/// When `holds` is false, `witness` is the lexicographically least failing
/// instance of the sub-law named by `clause` (or of `law` itself when
/// `clause` is absent), and re-evaluating that instance fails again.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub clause: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub detail: String,
    /// Set when the law is evaluated outside the class it is defined for.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

impl LawReport {
    pub fn pass(law: impl Into<String>) -> Self {
        LawReport {
            law: law.into(),
            holds: true,
            clause: None,
            witness: None,
            detail: String::new(),
            note: None,
        }
    }

    pub fn fail(law: impl Into<String>, detail: impl Into<String>) -> Self {
        LawReport {
            law: law.into(),
            holds: false,
            clause: None,
            witness: None,
            detail: detail.into(),
            note: None,
        }
    }

    pub fn with_clause(mut self, clause: impl Into<String>) -> Self {
        self.clause = Some(clause.into());
        self
    }

    pub fn with_witness(mut self, witness: Vec<usize>) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    /// Renames the report, keeping a failing sub-law as the clause.
    pub fn renamed(mut self, law: impl Into<String>) -> Self {
        let old = std::mem::replace(&mut self.law, law.into());
        if !self.holds && self.clause.is_none() {
            self.clause = Some(old);
        }
        self
    }

    /// Conjunction of several reports: the first failure wins.
    pub fn all(law: impl Into<String>, parts: impl IntoIterator<Item = LawReport>) -> Self {
        let law = law.into();
        for part in parts {
            if !part.holds {
                return part.renamed(law);
            }
        }
        LawReport::pass(law)
    }
}

/// A law that can be evaluated on one instance (tuple of carrier indices).
pub trait InstanceLaw<S: ?Sized> {
    fn name(&self) -> &'static str;
    fn arity(&self) -> usize;
    /// Evaluates one instance. Instances outside the law's quantifier range
    /// (for example a non-projection where a projection is expected) hold
    /// vacuously.
    fn holds_at(&self, s: &S, w: &[usize]) -> bool;
    fn describe(&self, s: &S, w: &[usize]) -> String;

    /// Checks every instance in lexicographic order.
    fn check(&self, s: &S, n: usize) -> LawReport {
        match first_failure(n, self.arity(), |w| self.holds_at(s, w)) {
            None => LawReport::pass(self.name()),
            Some(w) => LawReport::fail(self.name(), self.describe(s, &w)).with_witness(w),
        }
    }
}

/// Lexicographically least tuple in `0..n` of length `arity` on which `pred`
/// is false.
pub fn first_failure(
    n: usize,
    arity: usize,
    mut pred: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    if n == 0 && arity > 0 {
        return None;
    }
    let mut w = vec![0usize; arity];
    loop {
        if !pred(&w) {
            return Some(w);
        }
        // odometer, last coordinate fastest
        let mut i = arity;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            w[i] += 1;
            if w[i] < n {
                break;
            }
            w[i] = 0;
        }
    }
}
