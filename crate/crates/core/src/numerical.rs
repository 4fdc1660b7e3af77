//! Submonoids of `(Z+, +)` generated by finitely many integers.

use num_integer::Integer;

use crate::error::{Error, Result};

/// A numerical semigroup `<g_1, .., g_k>`, not necessarily of gcd one.
///
/// Membership is answered from a table of the reduced semigroup
/// `<g_1/d, .., g_k/d>` up to its conductor; beyond it every multiple of `d`
/// is a member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<u64>,
    minimal: Vec<u64>,
    gcd: u64,
    reduced_conductor: u64,
    reduced_table: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn new(generators: &[u64]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidDescriptor("numerical semigroup needs generators".into()));
        }
        if let Some(&g) = generators.iter().find(|&&g| g < 2) {
            return Err(Error::InvalidDescriptor(format!(
                "numerical generators must be >= 2, got {g}"
            )));
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let gcd = gens.iter().fold(0u64, |acc, &g| acc.gcd(&g));
        let reduced: Vec<u64> = gens.iter().map(|g| g / gcd).collect();

        // Schur's bound: the Frobenius number is below (min - 1)(max - 1).
        let lo = reduced[0];
        let hi = *reduced.last().unwrap();
        let bound = (lo * hi + 1) as usize;
        let mut table = vec![false; bound + 1];
        table[0] = true;
        for n in 1..=bound {
            table[n] = reduced.iter().any(|&g| g as usize <= n && table[n - g as usize]);
        }
        let reduced_conductor = (0..=bound)
            .rev()
            .find(|&n| !table[n])
            .map_or(0, |frob| frob as u64 + 1);
        table.truncate(reduced_conductor as usize);

        let mut minimal: Vec<u64> = Vec::new();
        for &g in &gens {
            if !representable(g, &minimal) {
                minimal.push(g);
            }
        }
        Ok(NumericalSemigroup {
            generators: gens,
            minimal,
            gcd,
            reduced_conductor,
            reduced_table: table,
        })
    }

    /// Sorted, duplicate-free generators as given.
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.minimal
    }

    pub fn gcd(&self) -> u64 {
        self.gcd
    }

    /// Smallest `c` such that every multiple of the gcd that is `>= c` is a member.
    pub fn conductor(&self) -> u64 {
        self.reduced_conductor * self.gcd
    }

    pub fn contains(&self, n: u64) -> bool {
        if !n.is_multiple_of(self.gcd) {
            return false;
        }
        let r = n / self.gcd;
        r >= self.reduced_conductor || self.reduced_table[r as usize]
    }

    pub fn contains_signed(&self, n: i64) -> bool {
        n >= 0 && self.contains(n as u64)
    }

    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&n| self.contains(n)).collect()
    }

    /// The `k`-th smallest member, counting from zero.
    pub fn nth_member(&self, k: usize) -> u64 {
        let mut seen = 0;
        let mut n = 0;
        loop {
            if self.contains(n) {
                if seen == k {
                    return n;
                }
                seen += 1;
            }
            n += 1;
        }
    }

    /// Multiplicities of the minimal generators summing to `n`, if `n` is a member.
    pub fn factorization(&self, n: u64) -> Option<Vec<u64>> {
        if !self.contains(n) {
            return None;
        }
        let n = n as usize;
        // last[m] = index of a generator used to reach m
        let mut last: Vec<Option<usize>> = vec![None; n + 1];
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for m in 1..=n {
            for (i, &g) in self.minimal.iter().enumerate() {
                let g = g as usize;
                if g <= m && reach[m - g] {
                    reach[m] = true;
                    last[m] = Some(i);
                    break;
                }
            }
        }
        let mut counts = vec![0; self.minimal.len()];
        let mut m = n;
        while m > 0 {
            let i = last[m].expect("member is reachable");
            counts[i] += 1;
            m -= self.minimal[i] as usize;
        }
        Some(counts)
    }
}

fn representable(n: u64, gens: &[u64]) -> bool {
    let n = n as usize;
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for m in 1..=n {
        reach[m] = gens.iter().any(|&g| g as usize <= m && reach[m - g as usize]);
    }
    reach[n]
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Membership by brute force over bounded multiplicities.
    fn brute_members(gens: &[u64], bound: u64) -> Vec<u64> {
        let mut found = vec![false; bound as usize + 1];
        found[0] = true;
        let mut frontier = vec![0u64];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = x + g;
                if y <= bound && !found[y as usize] {
                    found[y as usize] = true;
                    frontier.push(y);
                }
            }
        }
        (0..=bound).filter(|&n| found[n as usize]).collect()
    }

    #[test]
    fn two_three() {
        let s = NumericalSemigroup::new(&[3, 2, 3]).unwrap();
        assert_eq!(s.generators(), &[2, 3]);
        assert_eq!(s.conductor(), 2);
        assert_eq!(s.members_up_to(6), vec![0, 2, 3, 4, 5, 6]);
        assert!(!s.contains(1));
    }

    #[test]
    fn agrees_with_brute_force() {
        for gens in [&[2u64, 3][..], &[3, 5], &[4, 6, 9], &[5, 7, 11], &[4, 6], &[6, 10, 15]] {
            let s = NumericalSemigroup::new(gens).unwrap();
            assert_eq!(s.members_up_to(200), brute_members(gens, 200), "{gens:?}");
        }
    }

    #[test]
    fn conductor_of_classic_examples() {
        // Frobenius numbers 7 for <3,5> and 1 for <2,3>
        assert_eq!(NumericalSemigroup::new(&[3, 5]).unwrap().conductor(), 8);
        let s = NumericalSemigroup::new(&[4, 6]).unwrap();
        assert_eq!(s.gcd(), 2);
        assert_eq!(s.conductor(), 4);
        assert!(s.contains(10) && !s.contains(11) && !s.contains(2));
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let s = NumericalSemigroup::new(&[2, 4, 5, 7]).unwrap();
        assert_eq!(s.minimal_generators(), &[2, 5]);
    }

    #[test]
    fn rejects_small_generators() {
        assert!(NumericalSemigroup::new(&[1, 3]).is_err());
        assert!(NumericalSemigroup::new(&[]).is_err());
    }

    #[test]
    fn factorization_sums_back() {
        let s = NumericalSemigroup::new(&[3, 5, 7]).unwrap();
        for n in 0..60 {
            match s.factorization(n) {
                Some(c) => {
                    let total: u64 =
                        c.iter().zip(s.minimal_generators()).map(|(k, g)| k * g).sum();
                    assert_eq!(total, n);
                }
                None => assert!(!s.contains(n)),
            }
        }
    }
}
