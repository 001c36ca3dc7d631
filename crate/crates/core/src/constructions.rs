//! Executable constructions behind the inequality `π_k(D) ≤ α_k(D)` for spine
//! digraphs, ending in [`certify`], which always emits a checkable
//! [`Certificate`].
//!
//! [`certify`] tries its branches in this order:
//!
//! 1. **small-x** (`|X| < k`): the spine path plus singleton `Y` paths against
//!    a coloring that uses every vertex.
//! 2. **long-path**: the spine path has a zigzag violation, so some `y` can be
//!    spliced in to get a path on `|X| + 1` vertices.
//! 3. **fishbone**: the path is zigzag-free; [`fishbone`] builds two disjoint
//!    paths covering `X` with total size `|X| + k + 1`.
//! 4. **loose**: [`fishbone`] got stuck, and the place where it got stuck is a
//!    k-subset of `X` with no common neighbour in `Y`.
//!
//! Neither the longest path nor global tightness is ever computed; every
//! branch is polynomial.

use thiserror::Error;

use crate::certificate::{CaseTag, Certificate, KPartialColoring, PathPartition};
use crate::digraph::{bit, iter_mask, mask_of, Digraph, Path, VertexMask};
use crate::recognition::{
    is_valid_loose_witness, zigzag_violation, LooseWitness, RecognitionError, SpinePartition, ZigzagKind,
    ZigzagViolation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("k must be at least 1")]
    InvalidK,
    #[error("spine path is not zigzag-free: {0}")]
    NotZigzagFree(ZigzagViolation),
    #[error("|X| = {x_len} is smaller than k = {k}")]
    XSmallerThanK { x_len: usize, k: usize },
    #[error("loose witness is invalid: {0}")]
    InvalidWitness(String),
    #[error("zigzag violation does not hold: {0}")]
    InvalidViolation(ZigzagViolation),
    #[error("internal invariant violated: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Recognition(#[from] RecognitionError),
}

fn invariant(ok: bool, what: impl FnOnce() -> String) -> Result<(), ConstructionError> {
    if ok {
        Ok(())
    } else {
        Err(ConstructionError::InvariantViolated(what()))
    }
}

/// The spine path plus a singleton path per `Y` vertex. Its k-norm is
/// `min(|X|, k) + |Y|`.
pub fn trivial_partition(spine: &SpinePartition) -> PathPartition {
    let mut paths = Vec::with_capacity(1 + spine.y_len());
    if !spine.x_order.is_empty() {
        paths.push(spine.x_order.clone());
    }
    paths.extend(spine.y_set.iter().map(|&y| Path::single(y)));
    PathPartition::new(paths)
}

/// `{Y}` plus singletons of the first `min(|X|, k - 1)` spine vertices, or of
/// all of `X` when `|X| < k`.
pub fn baseline_coloring(spine: &SpinePartition, k: usize) -> KPartialColoring {
    let xs = spine.x_order.vertices();
    let take = if xs.len() < k { xs.len() } else { k.saturating_sub(1) };
    let mut classes = Vec::with_capacity(1 + take);
    classes.push(spine.y_set.clone());
    classes.extend(xs[..take].iter().map(|&x| vec![x]));
    KPartialColoring::new(k, classes)
}

/// One class per witness vertex; each `y` joins the first class whose
/// witness vertex it is not adjacent to. Weight `|Y| + k`.
pub fn loose_coloring(
    d: &Digraph,
    spine: &SpinePartition,
    k: usize,
    witness: &LooseWitness,
) -> Result<KPartialColoring, ConstructionError> {
    let set = match witness {
        LooseWitness::SmallX => {
            return Err(ConstructionError::XSmallerThanK { x_len: spine.x_len(), k });
        }
        LooseWitness::Subset(set) => set,
    };
    let mut sorted = set.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != k || mask_of(&sorted) & !spine.x_mask() != 0 {
        return Err(ConstructionError::InvalidWitness(format!(
            "{set:?} is not a {k}-subset of X"
        )));
    }
    let mut classes: Vec<Vec<usize>> = sorted.iter().map(|&x| vec![x]).collect();
    for &y in &spine.y_set {
        let slot = sorted.iter().position(|&x| !d.is_adjacent(x, y)).ok_or_else(|| {
            ConstructionError::InvalidWitness(format!("{y} is adjacent to every vertex of {sorted:?}"))
        })?;
        classes[slot].push(y);
    }
    Ok(KPartialColoring::new(k, classes))
}

/// Splices the violating `y` into the spine path, giving a path on
/// `|X| + 1` vertices; every other `Y` vertex is a singleton.
pub fn long_path_partition(
    d: &Digraph,
    spine: &SpinePartition,
    violation: &ZigzagViolation,
) -> Result<PathPartition, ConstructionError> {
    if !violation.holds_in(d, spine) {
        return Err(ConstructionError::InvalidViolation(*violation));
    }
    let xs = spine.x_order.vertices();
    let y = violation.y;
    let mut long = Vec::with_capacity(xs.len() + 1);
    match (violation.kind, violation.position) {
        (ZigzagKind::EntersFirst, _) => {
            long.push(y);
            long.extend_from_slice(xs);
        }
        (ZigzagKind::LeavesLast, _) => {
            long.extend_from_slice(xs);
            long.push(y);
        }
        (ZigzagKind::Zigzag, Some(i)) => {
            long.extend_from_slice(&xs[..=i]);
            long.push(y);
            long.extend_from_slice(&xs[i + 1..]);
        }
        (ZigzagKind::Zigzag, None) => return Err(ConstructionError::InvalidViolation(*violation)),
    }
    invariant(d.is_path(&long), || format!("spliced sequence {long:?} is not a path"))?;
    let mut paths = vec![Path::new(long)];
    paths.extend(spine.y_set.iter().filter(|&&v| v != y).map(|&v| Path::single(v)));
    Ok(PathPartition::new(paths))
}

/// Whether `(x_i, y)` is an arc for each of the first `t` spine vertices.
///
/// On a zigzag-free spine path this holds for any `y` adjacent to all of the
/// first `t` vertices.
pub fn prefix_orientation_check(d: &Digraph, spine: &SpinePartition, y: usize, t: usize) -> bool {
    let xs = spine.x_order.vertices();
    t <= xs.len() && xs[..t].iter().all(|&x| d.has_arc(x, y))
}

/// Two disjoint paths covering `X`, one ending at the last spine vertex and
/// the other at `y_terminal ∈ Y`, with `|p1| + |p2| = |X| + k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FishboneResult {
    /// Ends at `y_terminal`.
    pub p1: Path,
    /// Ends at the last spine vertex.
    pub p2: Path,
    pub y_terminal: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TightnessOutcome {
    Fishbone(FishboneResult),
    Loose(LooseWitness),
}

/// Checks the four fish-bone conditions: disjointness, total size
/// `|X| + k + 1`, terminals `{x_l, y}` with `y ∈ Y`, and `X` covered. Both
/// paths must also be paths of `d`.
pub fn check_fishbone(d: &Digraph, spine: &SpinePartition, k: usize, fb: &FishboneResult) -> Result<(), String> {
    let (m1, m2) = (fb.p1.mask(), fb.p2.mask());
    if !d.is_path(fb.p1.vertices()) || !d.is_path(fb.p2.vertices()) {
        return Err(format!("{} or {} is not a path", fb.p1, fb.p2));
    }
    if m1 & m2 != 0 {
        return Err(format!("{} and {} intersect", fb.p1, fb.p2));
    }
    if fb.p1.len() + fb.p2.len() != spine.x_len() + k + 1 {
        return Err(format!(
            "|p1| + |p2| = {} but |X| + k + 1 = {}",
            fb.p1.len() + fb.p2.len(),
            spine.x_len() + k + 1
        ));
    }
    let last = spine.x_order.terminal();
    let terminals = (fb.p1.terminal(), fb.p2.terminal());
    let y_ok = spine.y_set.contains(&fb.y_terminal);
    let ends_ok = terminals == (Some(fb.y_terminal), last) || terminals == (last, Some(fb.y_terminal));
    if !y_ok || !ends_ok {
        return Err(format!("terminals {terminals:?} are not {{x_l = {last:?}, y = {}}}", fb.y_terminal));
    }
    if spine.x_mask() & !(m1 | m2) != 0 {
        return Err("X is not covered".to_string());
    }
    Ok(())
}

/// Paths built at one recursion level.
struct Bones {
    /// Ends at a vertex of the level's `Y`.
    to_y: Vec<usize>,
    /// Ends at the last vertex of the level's prefix.
    to_x: Vec<usize>,
}

enum Level {
    Built(Bones),
    Stuck(Vec<usize>),
}

/// Builds a fish-bone pair on a zigzag-free spine path, or returns a k-loose
/// witness when the construction gets stuck.
///
/// Tightness is never checked up front. Level `j` works on a prefix `P_j` of
/// the spine path, the `Y` vertices adjacent to every vertex cut off so far,
/// and budget `k - j`. If a level cannot find the `Y` vertex the next step
/// needs, the level's stuck set together with the cut vertices is a k-subset
/// of `X` whose common `Y`-neighbours would have survived every filter, so
/// there are none.
pub fn fishbone(d: &Digraph, spine: &SpinePartition, k: usize) -> Result<TightnessOutcome, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::InvalidK);
    }
    if spine.x_len() < k {
        return Err(ConstructionError::XSmallerThanK { x_len: spine.x_len(), k });
    }
    if let Some(v) = zigzag_violation(d, spine)? {
        return Err(ConstructionError::NotZigzagFree(v));
    }
    let outcome = match fishbone_level(d, spine, spine.x_order.vertices(), spine.y_mask(), k, Vec::new())? {
        Level::Built(bones) => {
            let y_terminal = *bones.to_y.last().expect("nonempty");
            let fb = FishboneResult { p1: Path::new(bones.to_y), p2: Path::new(bones.to_x), y_terminal };
            check_fishbone(d, spine, k, &fb).map_err(ConstructionError::InvariantViolated)?;
            TightnessOutcome::Fishbone(fb)
        }
        Level::Stuck(mut set) => {
            set.sort_unstable();
            let witness = LooseWitness::Subset(set);
            invariant(is_valid_loose_witness(d, spine, k, &witness), || {
                format!("harvested witness {witness:?} has a common Y-neighbour")
            })?;
            TightnessOutcome::Loose(witness)
        }
    };
    Ok(outcome)
}

/// Latest spine position with an arc into the current `Y`, and its smallest
/// such `y`.
fn last_out_arc(d: &Digraph, prefix: &[usize], ys: VertexMask) -> Option<(usize, usize)> {
    prefix
        .iter()
        .enumerate()
        .rev()
        .find_map(|(i, &x)| iter_mask(d.out_mask(x) & ys).next().map(|y| (i, y)))
}

fn fishbone_level(
    d: &Digraph,
    spine: &SpinePartition,
    prefix: &[usize],
    ys: VertexMask,
    k: usize,
    mut cuts: Vec<usize>,
) -> Result<Level, ConstructionError> {
    if k == 1 {
        if ys & d.adj_mask(prefix[0]) == 0 {
            cuts.push(prefix[0]);
            return Ok(Level::Stuck(cuts));
        }
        let (i, y) = last_out_arc(d, prefix, ys)
            .ok_or_else(|| ConstructionError::InvariantViolated("no arc from the prefix into Y".into()))?;
        invariant(i + 1 < prefix.len(), || format!("last vertex {} has an arc to {y}", prefix[i]))?;
        let next = prefix[i + 1];
        let Some(entering) = iter_mask(ys & d.in_mask(next)).next() else {
            cuts.push(next);
            return Ok(Level::Stuck(cuts));
        };
        invariant(entering != y, || format!("{y} both leaves {} and enters {next}", prefix[i]))?;
        let mut to_y = prefix[..=i].to_vec();
        to_y.push(y);
        let mut to_x = vec![entering];
        to_x.extend_from_slice(&prefix[i + 1..]);
        return Ok(Level::Built(Bones { to_y, to_x }));
    }

    let head_common = prefix[..k].iter().fold(ys, |m, &x| m & d.adj_mask(x));
    let Some(dominator) = iter_mask(head_common).next() else {
        cuts.extend_from_slice(&prefix[..k]);
        return Ok(Level::Stuck(cuts));
    };
    invariant(prefix_orientation_check(d, spine, dominator, k), || {
        format!("{dominator} is adjacent to the first {k} spine vertices but not entered from all")
    })?;
    let (i, y) = last_out_arc(d, prefix, ys)
        .ok_or_else(|| ConstructionError::InvariantViolated("no arc from the prefix into Y".into()))?;
    invariant(i + 1 >= k, || format!("last out-arc position {} is before k = {k}", i + 1))?;
    invariant(i + 1 < prefix.len(), || format!("last vertex {} has an arc to {y}", prefix[i]))?;
    let next = prefix[i + 1];
    let next_ys = ys & d.adj_mask(next);
    invariant(next_ys & bit(y) == 0, || format!("{y} is adjacent to {next}"))?;
    cuts.push(next);
    match fishbone_level(d, spine, &prefix[..=i], next_ys, k - 1, cuts)? {
        Level::Stuck(set) => Ok(Level::Stuck(set)),
        Level::Built(inner) => {
            let entering = *inner.to_y.last().expect("nonempty");
            invariant(d.has_arc(entering, next), || format!("({entering}, {next}) is not an arc"))?;
            let mut to_y = inner.to_x;
            to_y.push(y);
            let mut to_x = inner.to_y;
            to_x.extend_from_slice(&prefix[i + 1..]);
            Ok(Level::Built(Bones { to_y, to_x }))
        }
    }
}

/// What a certificate was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    SmallX,
    LongPath(ZigzagViolation),
    Fishbone(FishboneResult),
    Loose(LooseWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certified {
    pub certificate: Certificate,
    pub evidence: Evidence,
}

/// Certificate for `π_k(D) ≤ α_k(D)` on a spine digraph.
pub fn certify(d: &Digraph, spine: &SpinePartition, k: usize) -> Result<Certificate, ConstructionError> {
    certify_detailed(d, spine, k).map(|c| c.certificate)
}

/// [`certify`], also returning the intermediate object the branch used.
pub fn certify_detailed(d: &Digraph, spine: &SpinePartition, k: usize) -> Result<Certified, ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::InvalidK);
    }
    let n = d.n();
    let y_len = spine.y_len();
    let (case_tag, partition, coloring, evidence) = if spine.x_len() < k {
        (CaseTag::SmallX, trivial_partition(spine), baseline_coloring(spine, k), Evidence::SmallX)
    } else if let Some(violation) = zigzag_violation(d, spine)? {
        (
            CaseTag::LongPath,
            long_path_partition(d, spine, &violation)?,
            baseline_coloring(spine, k),
            Evidence::LongPath(violation),
        )
    } else {
        match fishbone(d, spine, k)? {
            TightnessOutcome::Fishbone(fb) => {
                let used = fb.p1.mask() | fb.p2.mask();
                let mut paths = vec![fb.p1.clone(), fb.p2.clone()];
                paths.extend(spine.y_set.iter().filter(|&&y| used & bit(y) == 0).map(|&y| Path::single(y)));
                (
                    CaseTag::Fishbone,
                    PathPartition::new(paths),
                    baseline_coloring(spine, k),
                    Evidence::Fishbone(fb),
                )
            }
            TightnessOutcome::Loose(witness) => (
                CaseTag::Loose,
                trivial_partition(spine),
                loose_coloring(d, spine, k, &witness)?,
                Evidence::Loose(witness),
            ),
        }
    };
    let certificate = Certificate::new(n, k, case_tag, &partition, &coloring);
    let bound = match case_tag {
        CaseTag::SmallX | CaseTag::Loose => y_len + spine.x_len().min(k),
        CaseTag::LongPath | CaseTag::Fishbone => y_len + k - 1,
    };
    invariant(certificate.k_norm <= bound, || {
        format!("{case_tag}: k-norm {} above {bound}", certificate.k_norm)
    })?;
    invariant(certificate.weight == bound, || {
        format!("{case_tag}: weight {} differs from {bound}", certificate.weight)
    })?;
    Ok(Certified { certificate, evidence })
}
