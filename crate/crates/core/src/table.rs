//! Finite multiplication tables.
//!
//! A finite left cancellative monoid is a group, so a validated table always
//! carries its inverse map.

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    rows: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// Validates `rows` as the multiplication table of a left cancellative
    /// monoid. `identity` is detected when not given.
    pub fn new(rows: Vec<Vec<usize>>, identity: Option<usize>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidDescriptor("empty multiplication table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidDescriptor(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidDescriptor(format!(
                    "row {i} contains {bad}, outside 0..{n}"
                )));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            let mut seen = vec![false; n];
            for &x in row {
                if seen[x] {
                    return Err(Error::InvalidDescriptor(format!(
                        "row {i} is not injective (value {x} repeats): not left cancellative"
                    )));
                }
                seen[x] = true;
            }
        }
        let is_identity = |e: usize| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x);
        let identity = match identity {
            Some(e) if e < n && is_identity(e) => e,
            Some(e) => {
                return Err(Error::InvalidDescriptor(format!("{e} is not an identity element")))
            }
            None => (0..n)
                .find(|&e| is_identity(e))
                .ok_or_else(|| Error::InvalidDescriptor("table has no identity element".into()))?,
        };
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if rows[rows[a][b]][c] != rows[a][rows[b][c]] {
                        return Err(Error::InvalidDescriptor(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|a| rows[a].iter().position(|&x| x == identity).expect("rows are bijective"))
            .collect();
        Ok(GroupTable { rows, identity, inverse })
    }

    /// The cyclic group of order `n` under addition mod `n`.
    pub fn cyclic(n: usize) -> Self {
        let rows = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable::new(rows, Some(0)).expect("cyclic table is a group")
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.rows[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_group_s3() {
        // permutations of {0,1,2} in lexicographic order, composed as (p*q)(x) = p(q(x))
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let rows = perms
            .iter()
            .map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        let g = GroupTable::new(rows, None).unwrap();
        assert_eq!(g.identity(), 0);
        for a in 0..6 {
            assert_eq!(g.multiply(a, g.inverse(a)), 0);
        }
        assert_ne!(g.multiply(1, 2), g.multiply(2, 1));
    }

    #[test]
    fn rejects_non_cancellative_row() {
        let rows = vec![vec![0, 1], vec![1, 1]];
        let err = GroupTable::new(rows, Some(0)).unwrap_err();
        assert!(err.to_string().contains("row 1"), "{err}");
    }

    #[test]
    fn rejects_bad_identity() {
        let g = GroupTable::cyclic(3);
        assert!(GroupTable::new(g.rows().to_vec(), Some(1)).is_err());
    }
}
