//! Groups acting on a finite basis by permutations, given by generators.
//!
//! Coinvariants of such a permutation module are spanned by orbit classes,
//! and sign-twisted invariants by signed orbit sums. Both are computed here by
//! union-find over the generator relations; each relation `x_{g(b)} = ±x_b`
//! is one row of the stacked system `(g - χ(g)) x = 0`.

/// One generator of a group acting on `{0, .., n-1}`.
#[derive(Clone, Debug)]
pub struct Generator {
    pub map: Vec<u32>,
    /// Value of the twisting character on this generator.
    pub negative: bool,
}

impl Generator {
    pub fn untwisted(map: Vec<u32>) -> Self {
        Generator {
            map,
            negative: false,
        }
    }

    pub fn signed(map: Vec<u32>, sign: i8) -> Self {
        Generator {
            map,
            negative: sign < 0,
        }
    }
}

/// Orbit classes of a permutation action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbits {
    /// `class_of[b]` is the class of basis element `b`; classes are numbered
    /// by first appearance.
    pub class_of: Vec<u32>,
    pub count: usize,
}

impl Orbits {
    pub fn members(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.count];
        for (b, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(b as u32);
        }
        out
    }
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let next = parent[x as usize];
        parent[x as usize] = parent[next as usize];
        x = next;
    }
    x
}

pub fn orbits<'a, I>(size: usize, generators: I) -> Orbits
where
    I: IntoIterator<Item = &'a [u32]>,
{
    let mut parent: Vec<u32> = (0..size as u32).collect();
    for map in generators {
        debug_assert_eq!(map.len(), size);
        for (b, &gb) in map.iter().enumerate() {
            let a = find(&mut parent, b as u32);
            let c = find(&mut parent, gb);
            if a != c {
                let (lo, hi) = if a < c { (a, c) } else { (c, a) };
                parent[hi as usize] = lo;
            }
        }
    }
    let mut class_of = vec![u32::MAX; size];
    let mut root_class = vec![u32::MAX; size];
    let mut count = 0;
    for b in 0..size {
        let root = find(&mut parent, b as u32) as usize;
        if root_class[root] == u32::MAX {
            root_class[root] = count as u32;
            count += 1;
        }
        class_of[b] = root_class[root];
    }
    Orbits { class_of, count }
}

/// A vector with coefficients `±1` on a subset of the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedVector {
    /// `(basis index, coefficient is -1)`, sorted by index.
    pub terms: Vec<(u32, bool)>,
}

impl SignedVector {
    pub fn to_dense(&self, size: usize) -> Vec<i64> {
        let mut v = vec![0; size];
        for &(b, neg) in &self.terms {
            v[b as usize] = if neg { -1 } else { 1 };
        }
        v
    }
}

/// Basis of `{x : g·x = χ(g) x for every generator g}`.
///
/// Solutions are constant up to sign on each orbit; an orbit contributes one
/// vector unless its relations force `x = -x`, which only matters away from
/// characteristic 2. In characteristic 2 the twist is ignored entirely.
pub fn signed_orbit_sums(size: usize, generators: &[Generator], characteristic: u64) -> Vec<SignedVector> {
    let ignore_signs = characteristic == 2;
    // parity[b]: coefficient of b relative to its parent.
    let mut parent: Vec<u32> = (0..size as u32).collect();
    let mut parity = vec![false; size];
    let mut consistent = vec![true; size];

    fn find_signed(parent: &mut [u32], parity: &mut [bool], x: u32) -> (u32, bool) {
        let mut path = Vec::new();
        let mut cur = x;
        while parent[cur as usize] != cur {
            path.push(cur);
            cur = parent[cur as usize];
        }
        let root = cur;
        // Compress from the top so each node points at the root directly.
        let mut acc = false;
        for &node in path.iter().rev() {
            acc ^= parity[node as usize];
            parity[node as usize] = acc;
            parent[node as usize] = root;
        }
        (root, if path.is_empty() { false } else { parity[x as usize] })
    }

    for g in generators {
        debug_assert_eq!(g.map.len(), size);
        let twist = g.negative && !ignore_signs;
        for (b, &gb) in g.map.iter().enumerate() {
            // c_{g(b)} = χ(g) c_b.
            let (ra, pa) = find_signed(&mut parent, &mut parity, b as u32);
            let (rc, pc) = find_signed(&mut parent, &mut parity, gb);
            if ra == rc {
                if pa ^ pc != twist {
                    consistent[ra as usize] = false;
                }
            } else {
                let (lo, hi) = if ra < rc { (ra, rc) } else { (rc, ra) };
                parent[hi as usize] = lo;
                // c_b = (-1)^pa c_ra, c_gb = (-1)^pc c_rc, c_gb = (-1)^twist c_b.
                parity[hi as usize] = pa ^ pc ^ twist;
                consistent[lo as usize] = consistent[lo as usize] && consistent[hi as usize];
            }
        }
    }

    let mut by_root: Vec<Option<usize>> = vec![None; size];
    let mut out: Vec<SignedVector> = Vec::new();
    let mut roots = Vec::new();
    for b in 0..size as u32 {
        let (root, p) = find_signed(&mut parent, &mut parity, b);
        let slot = match by_root[root as usize] {
            Some(s) => s,
            None => {
                by_root[root as usize] = Some(out.len());
                out.push(SignedVector { terms: Vec::new() });
                roots.push(root);
                out.len() - 1
            }
        };
        out[slot].terms.push((b, p && !ignore_signs));
    }
    out.into_iter()
        .zip(roots)
        .filter(|(_, root)| consistent[*root as usize])
        .map(|(v, _)| v)
        .collect()
}
