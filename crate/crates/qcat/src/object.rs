//! Objects of the matrix category: finite, non-empty, ordered sets of
//! distinct labels. The order is fixed at creation and used only for
//! deterministic iteration and printing.

use crate::error::{QcatError, Result};
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FinObject {
    labels: Arc<Vec<String>>,
}

impl FinObject {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(QcatError::EmptyObject);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(QcatError::DuplicateLabel(l.clone()));
            }
        }
        Ok(FinObject {
            labels: Arc::new(labels),
        })
    }

    /// Convenience constructor from string slices; panics on invalid input,
    /// intended for tests and fixed fixtures.
    pub fn from_names(names: &[&str]) -> Self {
        FinObject::new(names.iter().map(|s| s.to_string()).collect())
            .expect("valid label list")
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false // objects are never empty by construction
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn require_index(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| QcatError::UnknownLabel {
            label: label.to_string(),
            object: self.to_string(),
        })
    }
}

impl fmt::Display for FinObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.labels.join(","))
    }
}

/// Split a comma-separated label list, respecting nesting in `()`, `{}`
/// and `<>` so that pair labels like `(a,b)` survive the round trip.
pub fn split_labels(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in text.chars() {
        match c {
            '(' | '{' | '<' => {
                depth += 1;
                cur.push(c);
            }
            ')' | '}' | '>' => {
                depth -= 1;
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur.clear();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}
