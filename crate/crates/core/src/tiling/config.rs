use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// Polygon sizes around a vertex in cyclic order, written `p.q.r[.s]`.
///
/// Three-valent configurations get a bigon inserted at every vertex when the
/// link is built; four-valent ones are used directly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexConfig {
    sizes: Vec<u32>,
}

impl VertexConfig {
    pub fn new(sizes: Vec<u32>) -> Result<Self> {
        if !(3..=4).contains(&sizes.len()) {
            return Err(Error::Parse {
                position: 0,
                message: format!("vertex configuration needs 3 or 4 polygons, got {}", sizes.len()),
            });
        }
        if let Some(pos) = sizes.iter().position(|&n| n < 3) {
            return Err(Error::Parse {
                position: pos,
                message: format!("polygon size {} is below 3", sizes[pos]),
            });
        }
        Ok(VertexConfig { sizes })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn valence(&self) -> usize {
        self.sizes.len()
    }

    pub fn needs_bigon(&self) -> bool {
        self.sizes.len() == 3
    }

    /// `Σ (n-2)/n`, the Euclidean angle sum around the vertex in units of π.
    pub fn euclidean_angle_sum(&self) -> Ratio<i64> {
        self.sizes
            .iter()
            .map(|&n| Ratio::new(n as i64 - 2, n as i64))
            .sum()
    }

    /// Euler characteristic contributed per crossing: `Σ 1/n - 1` for
    /// four-valent vertices, `Σ 1/n - 1/2` once a bigon is inserted.
    pub fn euler_per_crossing(&self) -> Ratio<i64> {
        let faces: Ratio<i64> = self.sizes.iter().map(|&n| Ratio::new(1, n as i64)).sum();
        if self.needs_bigon() {
            faces - Ratio::new(1, 2)
        } else {
            faces - Ratio::from_integer(1)
        }
    }

    /// Rotates the cyclic sequence left by `k`.
    pub fn rotated(&self, k: usize) -> Self {
        let mut sizes = self.sizes.clone();
        let len = sizes.len();
        sizes.rotate_left(k % len);
        VertexConfig { sizes }
    }
}

impl FromStr for VertexConfig {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut sizes = Vec::new();
        let mut offset = 0;
        for token in text.split('.') {
            let trimmed = token.trim();
            let value: u32 = trimmed.parse().map_err(|_| Error::Parse {
                position: offset,
                message: format!("`{trimmed}` is not a polygon size"),
            })?;
            if value < 3 {
                return Err(Error::Parse {
                    position: offset,
                    message: format!("polygon size {value} is below 3"),
                });
            }
            sizes.push(value);
            offset += token.len() + 1;
        }
        if !(3..=4).contains(&sizes.len()) {
            return Err(Error::Parse {
                position: 0,
                message: format!(
                    "`{text}` has {} polygons; expected 3 or 4",
                    sizes.len()
                ),
            });
        }
        Ok(VertexConfig { sizes })
    }
}

impl fmt::Display for VertexConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(u32::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        assert_eq!("3.4.6.4".parse::<VertexConfig>().unwrap().sizes(), &[3, 4, 6, 4]);
        assert_eq!("6.6.6".parse::<VertexConfig>().unwrap().sizes(), &[6, 6, 6]);
        assert_eq!("4.8.4.8".parse::<VertexConfig>().unwrap().sizes(), &[4, 8, 4, 8]);
    }

    #[test]
    fn reports_position_of_bad_token() {
        match "4.x.8".parse::<VertexConfig>() {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
        match "12.12.2.12".parse::<VertexConfig>() {
            Err(Error::Parse { position, message }) => {
                assert_eq!(position, 6);
                assert!(message.contains("below 3"));
            }
            other => panic!("{other:?}"),
        }
        assert!("4..8".parse::<VertexConfig>().is_err());
        assert!("".parse::<VertexConfig>().is_err());
        assert!("-3.4.4".parse::<VertexConfig>().is_err());
    }

    #[test]
    fn rejects_bad_lengths() {
        assert!("4.4".parse::<VertexConfig>().is_err());
        assert!("3.3.3.3.3".parse::<VertexConfig>().is_err());
        assert!(VertexConfig::new(vec![3, 3, 3, 3, 6]).is_err());
        assert!(VertexConfig::new(vec![3, 2, 3]).is_err());
    }

    #[test]
    fn euler_contributions() {
        let c: VertexConfig = "6.6.6".parse().unwrap();
        assert_eq!(c.euler_per_crossing(), Ratio::from_integer(0));
        let c: VertexConfig = "5.5.5.5".parse().unwrap();
        assert_eq!(c.euler_per_crossing(), Ratio::new(-1, 5));
        assert_eq!(c.euclidean_angle_sum(), Ratio::new(12, 5));
    }

    proptest! {
        #[test]
        fn display_round_trips(sizes in prop::collection::vec(3u32..200, 3..=4)) {
            let config = VertexConfig::new(sizes).unwrap();
            let back: VertexConfig = config.to_string().parse().unwrap();
            prop_assert_eq!(back, config);
        }
    }
}
