use std::fmt;

use crate::error::{Error, Result};

use super::shapes::Partition;

/// A bijection of `{0, .., d-1}`, stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidShape(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(d: usize) -> Self {
        Permutation {
            images: (0..d).collect(),
        }
    }

    pub fn transposition(d: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..d).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The cycle `c[0] -> c[1] -> .. -> c[0]`.
    pub fn cycle(d: usize, c: &[usize]) -> Self {
        let mut images: Vec<usize> = (0..d).collect();
        for (k, &from) in c.iter().enumerate() {
            images[from] = c[(k + 1) % c.len()];
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// `self ∘ g ∘ self⁻¹`.
    pub fn conjugate(&self, g: &Permutation) -> Permutation {
        self.compose(g).compose(&self.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycles, each starting at its smallest element, ordered by that
    /// element. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.images[start];
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.images[next];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths form a partition")
    }

    /// +1 or -1.
    pub fn sign(&self) -> i8 {
        let cycles = self.cycles().len();
        if (self.images.len() - cycles) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All of `S_d` in lexicographic order of images.
    pub fn all(d: usize) -> Vec<Permutation> {
        let mut current: Vec<usize> = (0..d).collect();
        let mut out = vec![Permutation {
            images: current.clone(),
        }];
        while next_permutation(&mut current) {
            out.push(Permutation {
                images: current.clone(),
            });
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points, 0-based; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, i) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{i}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

pub(crate) fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
