//! Exhaustive enumeration of numerical semigroups by genus via the semigroup
//! tree: the root is the full semigroup and the children of a node are
//! obtained by removing one minimal generator strictly greater than the
//! Frobenius number, which adds exactly one gap. Every semigroup of genus
//! g+1 arises from exactly one genus-g parent this way, so the traversal
//! visits each semigroup once.

use rayon::prelude::*;

use crate::cotangent;
use crate::error::SemigroupError;
use crate::semigroup::NumericalSemigroup;

/// Genus ceiling accepted by [`enumerate_by_genus`]. The tree grows roughly
/// by a golden-ratio factor per level, so anything beyond this is a job for
/// a dedicated census engine, not this crate.
pub const GENUS_CAP: i64 = 25;

/// A node of the semigroup tree.
#[derive(Clone, Debug)]
pub struct TreeNode {
    pub semigroup: NumericalSemigroup,
    /// Minimal generators strictly greater than the Frobenius number;
    /// removing one of them yields a child.
    pub effective_generators: Vec<i64>,
}

impl TreeNode {
    pub fn new(semigroup: NumericalSemigroup) -> Self {
        let effective_generators = semigroup
            .generators()
            .iter()
            .copied()
            .filter(|&a| a > semigroup.frobenius())
            .collect();
        Self {
            semigroup,
            effective_generators,
        }
    }

    /// The full semigroup, the unique node of genus 0.
    pub fn root() -> Self {
        Self::new(NumericalSemigroup::trivial())
    }

    /// Children in gap-set order.
    pub fn children(&self) -> Vec<TreeNode> {
        let mut out = Vec::with_capacity(self.effective_generators.len());
        for &e in &self.effective_generators {
            let mut gaps = self.semigroup.gaps().to_vec();
            gaps.push(e); // e > F, so the gap list stays sorted
            let child = NumericalSemigroup::from_gaps(&gaps)
                .expect("removing a minimal generator above F keeps the complement closed");
            out.push(TreeNode::new(child));
        }
        out
    }
}

/// Iterator over all numerical semigroups of genus at most the requested
/// bound, in (genus, gap-set lexicographic) order. Levels are expanded
/// breadth-first; child expansion runs in parallel for wide levels and the
/// per-level sort makes the output order independent of thread count.
pub struct GenusIter {
    max_genus: i64,
    level: Vec<TreeNode>,
    cursor: usize,
    current_genus: i64,
}

impl Iterator for GenusIter {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        if self.cursor == self.level.len() {
            if self.current_genus >= self.max_genus || self.level.is_empty() {
                return None;
            }
            self.level = expand_level(&self.level);
            self.current_genus += 1;
            self.cursor = 0;
            if self.level.is_empty() {
                return None;
            }
        }
        let item = self.level[self.cursor].semigroup.clone();
        self.cursor += 1;
        Some(item)
    }
}

fn expand_level(level: &[TreeNode]) -> Vec<TreeNode> {
    let mut next: Vec<TreeNode> = if level.len() >= 64 {
        level.par_iter().flat_map_iter(|n| n.children()).collect()
    } else {
        level.iter().flat_map(|n| n.children()).collect()
    };
    next.sort_unstable_by(|a, b| a.semigroup.gaps().cmp(b.semigroup.gaps()));
    next
}

/// Streams every numerical semigroup of genus `<= max_genus` exactly once,
/// genus ascending and gap sets lexicographic within a genus.
pub fn enumerate_by_genus(max_genus: i64) -> Result<GenusIter, SemigroupError> {
    if max_genus > GENUS_CAP {
        return Err(SemigroupError::CapExceeded {
            requested: max_genus,
            cap: GENUS_CAP,
        });
    }
    Ok(GenusIter {
        max_genus,
        level: if max_genus >= 0 {
            vec![TreeNode::root()]
        } else {
            vec![]
        },
        cursor: 0,
        current_genus: 0,
    })
}

/// Number of semigroups of each genus `0..=max_genus`.
pub fn census(max_genus: i64) -> Result<Vec<u64>, SemigroupError> {
    let mut counts = vec![0u64; (max_genus.max(-1) + 1) as usize];
    for s in enumerate_by_genus(max_genus)? {
        counts[s.genus() as usize] += 1;
    }
    Ok(counts)
}

/// Keeps the semigroups whose positive graded cotangent part is nonzero
/// (`dim T^{1,+} >= 1`). The full semigroup is dropped: it has no graded
/// cotangent data.
pub fn filter_non_negatively_graded<I>(
    stream: I,
) -> impl Iterator<Item = Result<NumericalSemigroup, SemigroupError>>
where
    I: Iterator<Item = NumericalSemigroup>,
{
    stream.filter_map(|s| {
        if s.genus() == 0 {
            return None;
        }
        match cotangent::is_negatively_graded(&s) {
            Ok(true) => None,
            Ok(false) => Some(Ok(s)),
            Err(e) => Some(Err(e)),
        }
    })
}
