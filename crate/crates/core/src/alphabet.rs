use std::collections::HashMap;

use crate::error::{Error, Result, SetKind};

/// A finite, ordered set of unique identifiers.
///
/// The construction order is the iteration order everywhere; algorithms that
/// must pick "the first" element (minimization representatives, lexicographic
/// isomorphism search) rely on it.
#[derive(Debug, Clone)]
pub struct Alphabet {
    kind: SetKind,
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl Alphabet {
    pub fn new<I, S>(kind: SetKind, labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out = Alphabet {
            kind,
            labels: Vec::new(),
            index: HashMap::new(),
        };
        for label in labels {
            let label = label.into();
            if out.index.contains_key(&label) {
                return Err(Error::DuplicateIdentifier { kind, id: label });
            }
            out.index.insert(label.clone(), out.labels.len());
            out.labels.push(label);
        }
        if out.labels.is_empty() {
            return Err(Error::EmptySet { kind });
        }
        Ok(out)
    }

    /// Labels `prefix0, prefix1, ...`.
    pub fn numbered(kind: SetKind, prefix: &str, len: usize) -> Result<Self> {
        Self::new(kind, (0..len).map(|i| format!("{prefix}{i}")))
    }

    pub fn kind(&self) -> SetKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn get(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn lookup(&self, label: &str) -> Result<usize> {
        self.get(label).ok_or_else(|| Error::UnknownIdentifier {
            kind: self.kind,
            id: label.to_string(),
        })
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &str)> {
        self.labels.iter().enumerate().map(|(i, l)| (i, l.as_str()))
    }

    /// Same labels, tagged as a different kind of set.
    pub fn retagged(&self, kind: SetKind) -> Self {
        Alphabet {
            kind,
            labels: self.labels.clone(),
            index: self.index.clone(),
        }
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for Alphabet {}
