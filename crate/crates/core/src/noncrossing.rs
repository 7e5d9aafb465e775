//! Non-crossing partitions of `{0, .., n}` and maximal chains of them.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::dbasis::{to_arcs, DistinguishedBasis};
use crate::error::{Error, Result};
use crate::roots::Root;

/// Blocks sorted by their minimum, each block sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NCPartition {
    blocks: Vec<Vec<usize>>,
}

/// No `a < b < c < d` with `a, c` in one block and `b, d` in another.
pub fn is_noncrossing(blocks: &[Vec<usize>]) -> bool {
    for (x, p) in blocks.iter().enumerate() {
        for q in &blocks[x + 1..] {
            for &a in p {
                for &c in p.iter().filter(|&&c| c > a) {
                    let inside = q.iter().any(|&b| a < b && b < c);
                    let outside = q.iter().any(|&d| d < a || d > c);
                    if inside && outside {
                        return false;
                    }
                }
            }
        }
    }
    true
}

impl NCPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.iter().enumerate().any(|(i, &x)| i != x) {
            return Err(Error::MalformedChain(format!("{blocks:?} is not a partition of 0..=n")));
        }
        if !is_noncrossing(&blocks) {
            return Err(Error::MalformedChain(format!("{blocks:?} is crossing")));
        }
        Ok(Self { blocks })
    }

    pub fn singletons(n: usize) -> Self {
        Self { blocks: (0..=n).map(|i| vec![i]).collect() }
    }

    /// The largest element, so the ground set is `0..=n`.
    pub fn n(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum::<usize>() - 1
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.blocks.iter().position(|b| b.contains(&x)).expect("element of the ground set")
    }

    /// Merges blocks `i` and `j` (indices into [`blocks`](Self::blocks)).
    pub fn merge(&self, i: usize, j: usize) -> Self {
        let mut blocks = self.blocks.clone();
        let (lo, hi) = (i.min(j), i.max(j));
        let moved = blocks.remove(hi);
        blocks[lo].extend(moved);
        blocks[lo].sort_unstable();
        blocks.sort();
        Self { blocks }
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &NCPartition) -> bool {
        self.blocks.iter().all(|b| {
            let target = other.block_of(b[0]);
            b.iter().all(|&x| other.block_of(x) == target)
        })
    }
}

impl fmt::Display for NCPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            let parts: Vec<String> = b.iter().map(ToString::to_string).collect();
            write!(f, "{{{}}}", parts.join(","))?;
        }
        Ok(())
    }
}

/// A maximal chain `pi_0 < pi_1 < .. < pi_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct NCChain {
    partitions: Vec<NCPartition>,
}

/// The two blocks of `pi` merged into one block of `sigma`, ordered by
/// minimum, if `sigma` is obtained from `pi` by a single merge.
fn merged_pair<'a>(pi: &'a NCPartition, sigma: &NCPartition) -> Option<(&'a [usize], &'a [usize])> {
    if sigma.blocks.len() + 1 != pi.blocks.len() || !pi.refines(sigma) {
        return None;
    }
    let joined = sigma.blocks.iter().find(|b| !pi.blocks.contains(b))?;
    let parts: Vec<&Vec<usize>> = pi.blocks.iter().filter(|b| joined.contains(&b[0])).collect();
    match parts.as_slice() {
        [b, c] => Some((b.as_slice(), c.as_slice())),
        _ => None,
    }
}

impl NCChain {
    pub fn new(partitions: Vec<NCPartition>) -> Result<Self> {
        let Some(first) = partitions.first() else {
            return Err(Error::MalformedChain("empty chain".into()));
        };
        let n = first.n();
        if partitions.len() != n + 1 {
            return Err(Error::MalformedChain(format!("expected {} partitions, got {}", n + 1, partitions.len())));
        }
        if *first != NCPartition::singletons(n) {
            return Err(Error::MalformedChain("chain must start at the singletons".into()));
        }
        for (k, w) in partitions.windows(2).enumerate() {
            if w[1].n() != n || merged_pair(&w[0], &w[1]).is_none() {
                return Err(Error::MalformedChain(format!("step {} is not a single merge", k + 1)));
            }
        }
        Ok(Self { partitions })
    }

    pub fn from_blocks(chain: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        Self::new(chain.into_iter().map(NCPartition::new).collect::<Result<_>>()?)
    }

    pub fn n(&self) -> usize {
        self.partitions.len() - 1
    }

    pub fn partitions(&self) -> &[NCPartition] {
        &self.partitions
    }
}

impl fmt::Display for NCChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.partitions.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" < "))
    }
}

/// Connected components of the first `k` arcs, for `k = 0..=n`.
pub fn pi_chain(basis: &DistinguishedBasis) -> NCChain {
    let n = basis.n();
    let mut partitions = vec![NCPartition::singletons(n)];
    for arc in to_arcs(basis).arcs {
        let last = partitions.last().expect("non-empty");
        let (i, j) = (last.block_of(arc.left), last.block_of(arc.right));
        assert_ne!(i, j, "arcs of a distinguished basis form a forest");
        partitions.push(last.merge(i, j));
    }
    NCChain { partitions }
}

/// `max { i in B : i < min B' }` for the blocks `B`, `B'` merged at a step.
fn lambda_step(b: &[usize], b2: &[usize]) -> usize {
    let m = b2[0];
    let value = *b.iter().filter(|&&i| i < m).max().expect("min B < min B'");
    debug_assert!(b2.iter().all(|&x| value < x));
    value
}

pub fn lambda_chain(chain: &NCChain) -> Vec<usize> {
    chain
        .partitions
        .windows(2)
        .map(|w| {
            let (b, b2) = merged_pair(&w[0], &w[1]).expect("validated chain");
            lambda_step(b, b2)
        })
        .collect()
}

/// The root added at each step runs from `lambda + 1` to `max B'`.
pub fn chain_to_basis(chain: &NCChain) -> DistinguishedBasis {
    let n = chain.n();
    let roots = chain
        .partitions
        .windows(2)
        .map(|w| {
            let (b, b2) = merged_pair(&w[0], &w[1]).expect("validated chain");
            let hi = *b2.last().expect("non-empty block");
            Root::new(lambda_step(b, b2) + 1, hi, n).expect("root inside 1..=n")
        })
        .collect();
    DistinguishedBasis::new_unchecked(roots)
}

fn extend_chains(chain: &mut Vec<NCPartition>, out: &mut Vec<NCChain>) {
    let last = chain.last().expect("non-empty").clone();
    if last.blocks.len() == 1 {
        out.push(NCChain { partitions: chain.clone() });
        return;
    }
    for i in 0..last.blocks.len() {
        for j in i + 1..last.blocks.len() {
            let next = last.merge(i, j);
            if is_noncrossing(&next.blocks) {
                chain.push(next);
                extend_chains(chain, out);
                chain.pop();
            }
        }
    }
}

/// All maximal chains, by merging pairs of blocks and keeping the
/// non-crossing results. Sorted.
pub fn enumerate_chains(n: usize) -> Vec<NCChain> {
    let start = NCPartition::singletons(n);
    let mut firsts = Vec::new();
    for i in 0..start.blocks.len() {
        for j in i + 1..start.blocks.len() {
            firsts.push(start.merge(i, j));
        }
    }
    if firsts.is_empty() {
        return vec![NCChain { partitions: vec![start] }];
    }
    let mut out: Vec<NCChain> = firsts
        .into_par_iter()
        .filter(|p| is_noncrossing(&p.blocks))
        .flat_map_iter(|p| {
            let mut found = Vec::new();
            extend_chains(&mut vec![start.clone(), p], &mut found);
            found
        })
        .collect();
    let mut seen = HashSet::new();
    out.retain(|c| seen.insert(c.clone()));
    out.sort();
    out
}
