use std::fmt;

use crate::error::{Error, Result};

/// Integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::BadParameter("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::BadParameter("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadParameter("partition parts must be weakly decreasing".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The transpose: part `q` counts the parts of `self` that are `≥ q`.
    pub fn conjugate(&self) -> Self {
        let parts = (1..=self.parts[0])
            .map(|q| self.parts.iter().filter(|&&p| p >= q).count())
            .collect();
        Self { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}
