use num_bigint::BigUint;

use crate::error::{Error, Result};

use super::counting::factorial_big;
use super::permutation::Permutation;
use super::shapes::{partitions_of, Composition, SkewTuple};

/// The product of the symmetric groups on the blocks of a set partition of
/// `{0, .., d-1}`.
///
/// Blocks built from a composition are consecutive intervals; column groups
/// of a skew tuple are not.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YoungSubgroup {
    degree: usize,
    blocks: Vec<Vec<usize>>,
}

impl YoungSubgroup {
    pub fn from_composition(shape: &Composition) -> Self {
        let mut blocks = Vec::with_capacity(shape.len());
        let mut next = 0;
        for &len in shape.parts() {
            blocks.push((next..next + len).collect());
            next += len;
        }
        YoungSubgroup {
            degree: next,
            blocks,
        }
    }

    /// Blocks must partition `{0, .., degree-1}`. Missing points are added
    /// as singleton blocks.
    pub fn from_blocks(degree: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            block.sort_unstable();
            for &i in &block {
                if i >= degree || seen[i] {
                    return Err(Error::InvalidShape(format!(
                        "blocks do not partition {{0..{degree}}}"
                    )));
                }
                seen[i] = true;
            }
            if !block.is_empty() {
                out.push(block);
            }
        }
        out.extend((0..degree).filter(|&i| !seen[i]).map(|i| vec![i]));
        Ok(YoungSubgroup {
            degree,
            blocks: out,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_composition(&Composition::ones(degree))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Block sizes, in block order.
    pub fn shape(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    pub fn order(&self) -> BigUint {
        self.blocks.iter().map(|b| factorial_big(b.len())).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.blocks.iter().all(|b| b.len() <= 1)
    }

    /// `g` lies in the group iff it preserves every block setwise.
    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let mut block_of = vec![0; self.degree];
        for (k, b) in self.blocks.iter().enumerate() {
            for &i in b {
                block_of[i] = k;
            }
        }
        (0..self.degree).all(|i| block_of[g.apply(i)] == block_of[i])
    }

    /// Adjacent transpositions inside each block; they generate the group.
    pub fn generators(&self) -> Vec<Permutation> {
        self.blocks
            .iter()
            .flat_map(|b| {
                b.windows(2)
                    .map(|w| Permutation::transposition(self.degree, w[0], w[1]))
            })
            .collect()
    }

    /// Every element. Only sensible for small groups.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        for block in &self.blocks {
            if block.len() < 2 {
                continue;
            }
            let local = Permutation::all(block.len());
            out = out
                .iter()
                .flat_map(|g| {
                    local.iter().map(move |l| {
                        let mut images = g.images().to_vec();
                        for (k, &i) in block.iter().enumerate() {
                            images[i] = block[l.apply(k)];
                        }
                        Permutation::new(images).expect("block permutation")
                    })
                })
                .collect();
        }
        out
    }

    /// One representative per conjugacy class, with the class size.
    pub fn conjugacy_classes(&self) -> Vec<(Permutation, BigUint)> {
        let mut out = vec![(Permutation::identity(self.degree), BigUint::from(1u32))];
        for block in &self.blocks {
            if block.len() < 2 {
                continue;
            }
            let n = block.len();
            let mut next = Vec::new();
            for (rep, size) in &out {
                for cycle_type in partitions_of(n) {
                    let mut images = rep.images().to_vec();
                    let mut start = 0;
                    for &len in cycle_type.parts() {
                        for k in 0..len {
                            images[block[start + k]] = block[start + (k + 1) % len];
                        }
                        start += len;
                    }
                    let g = Permutation::new(images).expect("cycle placement");
                    let centralizer = crate::combinatorics::centralizer_order(
                        &Permutation::cycle_type_representative(&cycle_type),
                    );
                    let class = factorial_big(n) / BigUint::from(centralizer);
                    next.push((g, size * class));
                }
            }
            out = next;
        }
        out
    }

    /// Intersection with another Young subgroup of the same degree: the
    /// group of the common refinement of the two set partitions.
    pub fn meet(&self, other: &YoungSubgroup) -> YoungSubgroup {
        assert_eq!(self.degree, other.degree);
        let mut blocks = Vec::new();
        for a in &self.blocks {
            for b in &other.blocks {
                let common: Vec<usize> = a.iter().copied().filter(|i| b.contains(i)).collect();
                if !common.is_empty() {
                    blocks.push(common);
                }
            }
        }
        YoungSubgroup::from_blocks(self.degree, blocks).expect("meet of set partitions")
    }

    /// `π G π⁻¹`.
    pub fn conjugate_by(&self, pi: &Permutation) -> YoungSubgroup {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&i| pi.apply(i)).collect())
            .collect();
        YoungSubgroup::from_blocks(self.degree, blocks).expect("relabelled set partition")
    }
}

impl Permutation {
    /// A permutation of the given cycle type on `{0, .., n-1}`.
    pub fn cycle_type_representative(cycle_type: &super::shapes::Partition) -> Permutation {
        let n = cycle_type.weight();
        let mut images: Vec<usize> = (0..n).collect();
        let mut start = 0;
        for &len in cycle_type.parts() {
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Permutation::new(images).expect("cycle placement")
    }
}

/// The group of row stabilizers of `shape`: the Young subgroup whose blocks
/// are the rows of all blocks, in row-major numbering.
pub fn row_group(shape: &SkewTuple) -> YoungSubgroup {
    YoungSubgroup::from_blocks(shape.weight(), shape.rows()).expect("rows partition the boxes")
}

/// The column stabilizer of `shape` under the same row-major numbering as
/// `row_group`. Its block sizes are the rows of the conjugate shape.
pub fn column_group(shape: &SkewTuple) -> YoungSubgroup {
    YoungSubgroup::from_blocks(shape.weight(), shape.columns())
        .expect("columns partition the boxes")
}

/// The Young subgroup of the blockwise conjugate shape with consecutive
/// blocks, ignoring the box numbering of `shape`. Kept only as an
/// alternative reading for the convention report; it is not the column
/// stabilizer.
pub fn consecutive_conjugate_group(shape: &SkewTuple) -> YoungSubgroup {
    row_group(&shape.conjugate())
}
