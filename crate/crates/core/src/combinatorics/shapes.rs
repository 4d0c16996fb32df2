use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty partition
/// (weight 0) is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidShape(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(n)`, or the empty partition when `n == 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
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

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    pub fn to_composition(&self) -> Composition {
        Composition {
            parts: self.parts.clone(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts(s)?)
    }
}

/// All partitions of `n`, in reverse lexicographic order: `(n)` first,
/// `(1, .., 1)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            fill(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, n, &mut Vec::new(), &mut out);
    out
}

/// An ordered sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    /// `(1, .., 1)` of weight `d`.
    pub fn ones(d: usize) -> Self {
        Composition { parts: vec![1; d] }
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

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The parts sorted into a partition.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        p.to_composition()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Composition::new(parse_parts(s)?)
    }
}

/// All compositions of `n` (there are `2^(n-1)` for `n >= 1`), in
/// lexicographic order of their parts.
pub fn compositions_of(n: usize) -> Vec<Composition> {
    fn fill(remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if remaining == 0 {
            out.push(Composition {
                parts: current.clone(),
            });
            return;
        }
        for part in 1..=remaining {
            current.push(part);
            fill(remaining - part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, &mut Vec::new(), &mut out);
    out
}

/// A tuple `(λ_1 | .. | λ_n)` of straight partitions, read as the skew
/// diagram whose blocks sit corner to corner.
///
/// Boxes are numbered row-major inside each block, blocks left to right, so
/// every row is an interval of consecutive box numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SkewTuple {
    blocks: Vec<Partition>,
}

impl SkewTuple {
    pub fn new(blocks: Vec<Partition>) -> Self {
        SkewTuple { blocks }
    }

    pub fn blocks(&self) -> &[Partition] {
        &self.blocks
    }

    pub fn weight(&self) -> usize {
        self.blocks.iter().map(Partition::weight).sum()
    }

    /// Blockwise conjugate.
    pub fn conjugate(&self) -> SkewTuple {
        SkewTuple {
            blocks: self.blocks.iter().map(Partition::conjugate).collect(),
        }
    }

    /// Row lengths of all blocks, concatenated.
    pub fn row_lengths(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(|b| b.parts().iter().copied()).collect()
    }

    /// Box sets of the rows, under the row-major numbering.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut next = 0;
        for len in self.row_lengths() {
            out.push((next..next + len).collect());
            next += len;
        }
        out
    }

    /// Box sets of the columns, under the same row-major numbering as `rows`.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut offset = 0;
        for block in &self.blocks {
            let starts: Vec<usize> = block
                .parts()
                .iter()
                .scan(offset, |acc, &len| {
                    let start = *acc;
                    *acc += len;
                    Some(start)
                })
                .collect();
            for (j, &height) in block.conjugate().parts().iter().enumerate() {
                out.push((0..height).map(|i| starts[i] + j).collect());
            }
            offset += block.weight();
        }
        out
    }
}

impl From<Partition> for SkewTuple {
    fn from(p: Partition) -> Self {
        SkewTuple { blocks: vec![p] }
    }
}

impl fmt::Display for SkewTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{block}")?;
        }
        Ok(())
    }
}

impl FromStr for SkewTuple {
    type Err = Error;

    /// Blocks separated by `|`, parts by `,`: `"2,1|1"`.
    fn from_str(s: &str) -> Result<Self> {
        let blocks = s
            .split('|')
            .map(str::parse)
            .collect::<Result<Vec<Partition>>>()?;
        Ok(SkewTuple { blocks })
    }
}

/// Every tuple `(λ_1 | .. | λ_n)` with `λ_i ⊢ mu_i`, in the product order of
/// `partitions_of`.
pub fn tuples_refining(mu: &[usize]) -> Vec<SkewTuple> {
    let mut out = vec![SkewTuple::default()];
    for &part in mu {
        let choices = partitions_of(part);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |lambda| {
                    let mut blocks = prefix.blocks.clone();
                    blocks.push(lambda.clone());
                    SkewTuple { blocks }
                })
            })
            .collect();
    }
    out
}

/// Every tuple of nonempty partitions of total weight `d`.
pub fn skew_tuples_of(d: usize) -> Vec<SkewTuple> {
    compositions_of(d)
        .iter()
        .flat_map(|c| tuples_refining(c.parts()))
        .collect()
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s)
        .trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
        })
        .collect()
}
