use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Clique targets `(K_{t_1}^(r), ..., K_{t_l}^(r))`; color `i` (1-based)
/// must avoid `K_{t_i}^(r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TargetList {
    r: usize,
    sizes: Vec<usize>,
}

impl TargetList {
    pub fn new(r: usize, sizes: Vec<usize>) -> Result<Self> {
        if r < 2 {
            return Err(Error::param(format!(
                "uniformity must be at least 2, got {r}"
            )));
        }
        if sizes.is_empty() {
            return Err(Error::param("at least one target is required"));
        }
        if let Some(&t) = sizes.iter().find(|&&t| t <= r) {
            return Err(Error::param(format!(
                "target K_{t} must have more than r = {r} vertices"
            )));
        }
        Ok(Self { r, sizes })
    }

    /// Parses a comma-separated list such as `3,4`.
    pub fn parse(r: usize, text: &str) -> Result<Self> {
        let sizes = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::param(format!("bad target size `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(r, sizes)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn colors(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Clique size forbidden in `color` (1-based).
    pub fn size_for(&self, color: u32) -> usize {
        self.sizes[color as usize - 1]
    }
}

impl fmt::Display for TargetList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.sizes.iter().map(|t| t.to_string()).collect();
        write!(f, "({}) with r = {}", sizes.join(","), self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(TargetList::new(2, vec![3, 3]).is_ok());
        assert!(TargetList::new(2, vec![]).is_err());
        assert!(TargetList::new(2, vec![3, 2]).is_err());
        assert!(TargetList::new(1, vec![3]).is_err());
        assert_eq!(TargetList::parse(2, "3, 4").unwrap().sizes(), &[3, 4]);
        assert!(TargetList::parse(2, "3,x").is_err());
    }
}
