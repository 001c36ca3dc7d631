//! Spine and split structure: checking and finding `(X, Y)` partitions with
//! an explicit Hamiltonian path of `D[X]`, zigzag detection on that path,
//! and k-loose / k-tight classification.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::digraph::{bit, iter_mask, mask_of, mask_to_vec, Digraph, Path, VertexMask};

/// Largest vertex set the exhaustive searches accept.
pub const SEARCH_VERTEX_CAP: usize = 20;

/// Largest number of k-subsets [`classify_tightness`] will enumerate.
pub const TIGHTNESS_SUBSET_BUDGET: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("vertex set is not semi-complete: {0} and {1} are not adjacent")]
    NotSemicomplete(usize, usize),
    #[error("spine path is empty")]
    EmptyX,
}

/// `X` given as a Hamiltonian path of `D[X]`, and a stable set `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinePartition {
    pub x_order: Path,
    /// Sorted increasingly.
    pub y_set: Vec<usize>,
}

impl SpinePartition {
    pub fn new(x_order: impl Into<Path>, mut y_set: Vec<usize>) -> Self {
        y_set.sort_unstable();
        Self { x_order: x_order.into(), y_set }
    }

    pub fn x_len(&self) -> usize {
        self.x_order.len()
    }

    pub fn y_len(&self) -> usize {
        self.y_set.len()
    }

    pub fn x_mask(&self) -> VertexMask {
        self.x_order.mask()
    }

    pub fn y_mask(&self) -> VertexMask {
        mask_of(&self.y_set)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpineViolation {
    VertexOutOfRange(usize),
    Overlap(usize),
    Uncovered(Vec<usize>),
    XNotAPath,
    YNotStable(usize, usize),
}

impl fmt::Display for SpineViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpineViolation::VertexOutOfRange(v) => write!(f, "vertex {v} out of range"),
            SpineViolation::Overlap(v) => write!(f, "vertex {v} listed twice"),
            SpineViolation::Uncovered(vs) => write!(f, "vertices {vs:?} in neither X nor Y"),
            SpineViolation::XNotAPath => write!(f, "x order is not a path"),
            SpineViolation::YNotStable(u, v) => write!(f, "y set not stable: {u},{v} adjacent"),
        }
    }
}

pub fn check_spine_partition(
    d: &Digraph,
    x_order: &[usize],
    y_set: &[usize],
) -> Result<(), Vec<SpineViolation>> {
    let mut violations = Vec::new();
    let mut seen: VertexMask = 0;
    let mut in_range = true;
    for &v in x_order.iter().chain(y_set) {
        if v >= d.n() {
            violations.push(SpineViolation::VertexOutOfRange(v));
            in_range = false;
            continue;
        }
        if seen & bit(v) != 0 {
            violations.push(SpineViolation::Overlap(v));
        }
        seen |= bit(v);
    }
    let missing = d.full_mask() & !seen;
    if missing != 0 {
        violations.push(SpineViolation::Uncovered(mask_to_vec(missing)));
    }
    if in_range && !d.is_path(x_order) {
        violations.push(SpineViolation::XNotAPath);
    }
    let ys: Vec<usize> = y_set.iter().copied().filter(|&v| v < d.n()).collect();
    for (i, &u) in ys.iter().enumerate() {
        for &v in &ys[i + 1..] {
            if u != v && d.is_adjacent(u, v) {
                violations.push(SpineViolation::YNotStable(u, v));
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// Backtracking search for a Hamiltonian path of `D[subset]`.
///
/// Start vertices are tried in increasing id, successors in increasing id,
/// so the first path found is the lexicographically smallest one. Dead
/// `(visited, last)` states are remembered, which prunes without changing
/// which path is found.
pub fn find_hamiltonian_path(d: &Digraph, subset: &[usize]) -> Result<Option<Path>, RecognitionError> {
    let mask = mask_of(subset);
    let size = mask.count_ones() as usize;
    if size > SEARCH_VERTEX_CAP {
        return Err(RecognitionError::BudgetExceeded(format!(
            "Hamiltonian path search on {size} vertices (cap {SEARCH_VERTEX_CAP})"
        )));
    }
    Ok(hamiltonian_path_in_mask(d, mask))
}

pub(crate) fn hamiltonian_path_in_mask(d: &Digraph, mask: VertexMask) -> Option<Path> {
    if mask == 0 {
        return Some(Path::empty());
    }
    let mut dead = HashSet::new();
    let mut seq = Vec::with_capacity(mask.count_ones() as usize);
    for start in iter_mask(mask) {
        seq.clear();
        seq.push(start);
        if extend(d, mask, bit(start), start, &mut seq, &mut dead) {
            return Some(Path::new(seq));
        }
    }
    None
}

fn extend(
    d: &Digraph,
    target: VertexMask,
    visited: VertexMask,
    last: usize,
    seq: &mut Vec<usize>,
    dead: &mut HashSet<(VertexMask, usize)>,
) -> bool {
    if visited == target {
        return true;
    }
    if dead.contains(&(visited, last)) {
        return false;
    }
    for next in iter_mask(d.out_mask(last) & target & !visited) {
        seq.push(next);
        if extend(d, target, visited | bit(next), next, seq, dead) {
            return true;
        }
        seq.pop();
    }
    dead.insert((visited, last));
    false
}

/// True iff every two distinct vertices of `subset` are joined by an arc.
pub fn is_semicomplete(d: &Digraph, subset: &[usize]) -> bool {
    first_nonadjacent_pair(d, subset).is_none()
}

fn first_nonadjacent_pair(d: &Digraph, subset: &[usize]) -> Option<(usize, usize)> {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    for (i, &u) in sorted.iter().enumerate() {
        for &v in &sorted[i + 1..] {
            if u >= d.n() || v >= d.n() || !d.is_adjacent(u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

/// Hamiltonian path of a semi-complete `D[subset]` by insertion.
///
/// Vertices are added in increasing id. A new vertex `v` goes in front when
/// `(v, head)` is an arc, otherwise between the first consecutive pair
/// `(a, b)` with `(a, v)` and `(v, b)`, otherwise at the end. Because every
/// pair is adjacent, one of the three always applies.
pub fn hamiltonian_path_semicomplete(d: &Digraph, subset: &[usize]) -> Result<Path, RecognitionError> {
    if let Some((u, v)) = first_nonadjacent_pair(d, subset) {
        return Err(RecognitionError::NotSemicomplete(u, v));
    }
    let mut order: Vec<usize> = subset.to_vec();
    order.sort_unstable();
    order.dedup();
    let mut path: Vec<usize> = Vec::with_capacity(order.len());
    for v in order {
        match path.first() {
            None => path.push(v),
            Some(&head) if d.has_arc(v, head) => path.insert(0, v),
            Some(_) => {
                let slot = path
                    .windows(2)
                    .position(|w| d.has_arc(w[0], v) && d.has_arc(v, w[1]));
                match slot {
                    Some(i) => path.insert(i + 1, v),
                    None => path.push(v),
                }
            }
        }
    }
    Ok(Path::new(path))
}

/// Finds some spine partition by exhaustive search.
///
/// Candidate stable sets `Y` are tried from largest to smallest, ties in
/// lexicographic order of their sorted vertex lists; the first whose
/// complement is traceable wins. `X` is kept nonempty whenever `n >= 1`.
pub fn find_spine_partition(d: &Digraph) -> Result<Option<SpinePartition>, RecognitionError> {
    let n = d.n();
    if n > SEARCH_VERTEX_CAP {
        return Err(RecognitionError::BudgetExceeded(format!(
            "spine search on {n} vertices (cap {SEARCH_VERTEX_CAP})"
        )));
    }
    if n == 0 {
        return Ok(Some(SpinePartition::new(Path::empty(), vec![])));
    }
    let full = d.full_mask();
    for size in (0..n).rev() {
        let mut found = None;
        let mut chosen = Vec::with_capacity(size);
        for_each_stable_set(d, size, 0, 0, &mut chosen, &mut |y_mask| {
            match hamiltonian_path_in_mask(d, full & !y_mask) {
                Some(path) => {
                    found = Some(SpinePartition::new(path, mask_to_vec(y_mask)));
                    true
                }
                None => false,
            }
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

/// Visits stable sets of exactly `size` vertices in lexicographic order until
/// `visit` returns true. Returns whether it stopped early.
fn for_each_stable_set(
    d: &Digraph,
    size: usize,
    from: usize,
    current: VertexMask,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(VertexMask) -> bool,
) -> bool {
    if chosen.len() == size {
        return visit(current);
    }
    let remaining = size - chosen.len();
    for v in from..d.n() {
        if d.n() - v < remaining {
            break;
        }
        if d.adj_mask(v) & current != 0 {
            continue;
        }
        chosen.push(v);
        if for_each_stable_set(d, size, v + 1, current | bit(v), chosen, visit) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Split partition of the underlying graph via its degree sequence.
///
/// With degrees sorted decreasingly (ties by id) and `m` the largest index
/// with `d_m >= m - 1`, the underlying graph is split iff
/// `Σ_{i<=m} d_i = m(m-1) + Σ_{i>m} d_i`; the top `m` vertices then form a
/// clique and the rest a stable set. A clique of the underlying graph is
/// semi-complete in `D`, so `X` is ordered with
/// [`hamiltonian_path_semicomplete`].
pub fn find_split_partition(d: &Digraph) -> Option<SpinePartition> {
    let n = d.n();
    if n == 0 {
        return Some(SpinePartition::new(Path::empty(), vec![]));
    }
    let mut by_degree: Vec<usize> = d.vertices().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(d.underlying_degree(v)), v));
    let degrees: Vec<usize> = by_degree.iter().map(|&v| d.underlying_degree(v)).collect();
    let m = (1..=n).rev().find(|&i| degrees[i - 1] + 1 >= i).unwrap_or(0);
    let head: usize = degrees[..m].iter().sum();
    let tail: usize = degrees[m..].iter().sum();
    if head != m * (m - 1) + tail {
        return None;
    }
    let x = &by_degree[..m];
    let x_order = hamiltonian_path_semicomplete(d, x).ok()?;
    let spine = SpinePartition::new(x_order, by_degree[m..].to_vec());
    debug_assert!(check_spine_partition(d, spine.x_order.vertices(), &spine.y_set).is_ok());
    Some(spine)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZigzagKind {
    /// `(y, x_1)` is an arc.
    EntersFirst,
    /// `(x_l, y)` is an arc.
    LeavesLast,
    /// `(x_i, y)` and `(y, x_{i+1})` are both arcs.
    Zigzag,
}

impl ZigzagKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ZigzagKind::EntersFirst => "enters-first",
            ZigzagKind::LeavesLast => "leaves-last",
            ZigzagKind::Zigzag => "zigzag",
        }
    }
}

/// A vertex of `Y` that can be spliced into the spine path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZigzagViolation {
    pub kind: ZigzagKind,
    pub y: usize,
    /// 0-based position `i` in `x_order` for [`ZigzagKind::Zigzag`]: the arcs
    /// are `(x_order[i], y)` and `(y, x_order[i + 1])`.
    pub position: Option<usize>,
}

impl ZigzagViolation {
    /// Whether the arcs this violation names are present in `d`.
    pub fn holds_in(&self, d: &Digraph, spine: &SpinePartition) -> bool {
        let xs = spine.x_order.vertices();
        if xs.is_empty() || !spine.y_set.contains(&self.y) {
            return false;
        }
        match (self.kind, self.position) {
            (ZigzagKind::EntersFirst, None) => d.has_arc(self.y, xs[0]),
            (ZigzagKind::LeavesLast, None) => d.has_arc(xs[xs.len() - 1], self.y),
            (ZigzagKind::Zigzag, Some(i)) => {
                i + 1 < xs.len() && d.has_arc(xs[i], self.y) && d.has_arc(self.y, xs[i + 1])
            }
            _ => false,
        }
    }
}

impl fmt::Display for ZigzagViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.position {
            Some(i) => write!(f, "{} y={} at position {}", self.kind.as_str(), self.y, i),
            None => write!(f, "{} y={}", self.kind.as_str(), self.y),
        }
    }
}

/// First reason the spine path is not zigzag-free, scanning `y` in
/// increasing id and, per `y`, enters-first, leaves-last, then zigzag at the
/// smallest position. `None` means zigzag-free.
pub fn zigzag_violation(d: &Digraph, spine: &SpinePartition) -> Result<Option<ZigzagViolation>, RecognitionError> {
    let xs = spine.x_order.vertices();
    let (first, last) = match (xs.first(), xs.last()) {
        (Some(&f), Some(&l)) => (f, l),
        _ => return Err(RecognitionError::EmptyX),
    };
    for &y in &spine.y_set {
        if d.has_arc(y, first) {
            return Ok(Some(ZigzagViolation { kind: ZigzagKind::EntersFirst, y, position: None }));
        }
        if d.has_arc(last, y) {
            return Ok(Some(ZigzagViolation { kind: ZigzagKind::LeavesLast, y, position: None }));
        }
        if let Some(i) = xs.windows(2).position(|w| d.has_arc(w[0], y) && d.has_arc(y, w[1])) {
            return Ok(Some(ZigzagViolation { kind: ZigzagKind::Zigzag, y, position: Some(i) }));
        }
    }
    Ok(None)
}

/// Evidence that a spine digraph is k-loose.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LooseWitness {
    /// `|X| < k`.
    SmallX,
    /// A k-subset of `X` (sorted) with no common neighbour in `Y`.
    Subset(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tightness {
    Loose(LooseWitness),
    Tight,
}

/// Direct check of a loose witness against its definition.
pub fn is_valid_loose_witness(d: &Digraph, spine: &SpinePartition, k: usize, witness: &LooseWitness) -> bool {
    match witness {
        LooseWitness::SmallX => spine.x_len() < k,
        LooseWitness::Subset(set) => {
            let mask = mask_of(set);
            set.len() == k
                && mask.count_ones() as usize == k
                && mask & !spine.x_mask() == 0
                && !spine
                    .y_set
                    .iter()
                    .any(|&y| mask & !d.adj_mask(y) == 0)
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Exhaustive k-loose / k-tight classification.
///
/// k-subsets of `X` are enumerated in lexicographic order of their sorted
/// ids; the first without a common `Y`-neighbour is returned.
pub fn classify_tightness(d: &Digraph, spine: &SpinePartition, k: usize) -> Result<Tightness, RecognitionError> {
    let x_len = spine.x_len();
    if x_len < k {
        return Ok(Tightness::Loose(LooseWitness::SmallX));
    }
    let subsets = binomial(x_len, k);
    if subsets > TIGHTNESS_SUBSET_BUDGET {
        return Err(RecognitionError::BudgetExceeded(format!(
            "C({x_len}, {k}) = {subsets} subsets (budget {TIGHTNESS_SUBSET_BUDGET})"
        )));
    }
    let mut xs: Vec<usize> = spine.x_order.vertices().to_vec();
    xs.sort_unstable();
    let y_neighbourhoods: Vec<VertexMask> = spine.y_set.iter().map(|&y| d.adj_mask(y)).collect();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let mask = idx.iter().fold(0, |m, &i| m | bit(xs[i]));
        if !y_neighbourhoods.iter().any(|&nb| mask & !nb == 0) {
            return Ok(Tightness::Loose(LooseWitness::Subset(idx.iter().map(|&i| xs[i]).collect())));
        }
        // next combination
        let mut pos = k;
        while pos > 0 && idx[pos - 1] == x_len - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            return Ok(Tightness::Tight);
        }
        idx[pos - 1] += 1;
        for j in pos..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{directed_cycle, make_digraph};

    fn c5_spine() -> SpinePartition {
        SpinePartition::new(vec![1, 2, 3, 4], vec![0])
    }

    #[test]
    fn spine_partition_checks() {
        let d = directed_cycle(5);
        assert!(check_spine_partition(&d, &[1, 2, 3, 4], &[0]).is_ok());
        assert_eq!(
            check_spine_partition(&d, &[1, 2, 3], &[0, 4]),
            Err(vec![SpineViolation::YNotStable(0, 4)])
        );
        assert_eq!(
            check_spine_partition(&d, &[1, 3], &[0, 2, 4]),
            Err(vec![SpineViolation::XNotAPath, SpineViolation::YNotStable(0, 4)])
        );
        assert_eq!(
            check_spine_partition(&d, &[1, 2], &[0]),
            Err(vec![SpineViolation::Uncovered(vec![3, 4])])
        );
    }

    #[test]
    fn hamiltonian_search() {
        let d = directed_cycle(5);
        assert_eq!(
            find_hamiltonian_path(&d, &[0, 1, 2, 3, 4]).unwrap(),
            Some(Path::new(vec![0, 1, 2, 3, 4]))
        );
        let e = Digraph::edgeless(4).unwrap();
        assert_eq!(find_hamiltonian_path(&e, &[0, 1]).unwrap(), None);
        assert_eq!(find_hamiltonian_path(&e, &[3]).unwrap(), Some(Path::single(3)));
        let big = Digraph::edgeless(21).unwrap();
        let all: Vec<usize> = big.vertices().collect();
        assert!(matches!(
            find_hamiltonian_path(&big, &all),
            Err(RecognitionError::BudgetExceeded(_))
        ));
    }

    #[test]
    fn semicomplete_insertion() {
        let cyc = make_digraph(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        // 1 is appended after 0; 2 has an arc into the head 0 and is prepended
        assert_eq!(hamiltonian_path_semicomplete(&cyc, &[0, 1, 2]).unwrap().vertices(), &[2, 0, 1]);
        let trans = make_digraph(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(hamiltonian_path_semicomplete(&trans, &[0, 1, 2]).unwrap().vertices(), &[0, 1, 2]);
        let any = Digraph::edgeless(6).unwrap();
        assert_eq!(hamiltonian_path_semicomplete(&any, &[5]).unwrap().vertices(), &[5]);
        assert_eq!(
            hamiltonian_path_semicomplete(&directed_cycle(5), &[0, 1, 2]),
            Err(RecognitionError::NotSemicomplete(0, 2))
        );
        // middle insertion: path (0,2) then 1 with (0,1),(1,2)
        let mid = make_digraph(3, &[(0, 2), (0, 1), (1, 2)]).unwrap();
        assert_eq!(hamiltonian_path_semicomplete(&mid, &[0, 2, 1]).unwrap().vertices(), &[0, 1, 2]);
    }

    #[test]
    fn semicompleteness() {
        let two = make_digraph(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(is_semicomplete(&two, &[0, 1]));
        assert!(!is_semicomplete(&directed_cycle(5), &[0, 2]));
        assert!(is_semicomplete(&directed_cycle(5), &[]));
    }

    #[test]
    fn spine_search() {
        let d = directed_cycle(5);
        let spine = find_spine_partition(&d).unwrap().unwrap();
        // no stable pair has a traceable complement in C5
        assert_eq!(spine, c5_spine());

        let single = Digraph::edgeless(1).unwrap();
        assert_eq!(
            find_spine_partition(&single).unwrap(),
            Some(SpinePartition::new(vec![0], vec![]))
        );
        let e3 = Digraph::edgeless(3).unwrap();
        assert_eq!(
            find_spine_partition(&e3).unwrap(),
            Some(SpinePartition::new(vec![2], vec![0, 1]))
        );
        // two disjoint arcs: every stable Y leaves an untraceable complement
        let two_arcs = make_digraph(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(find_spine_partition(&two_arcs).unwrap(), None);
        let with_bridge = make_digraph(4, &[(0, 1), (2, 3), (1, 2)]).unwrap();
        let s = find_spine_partition(&with_bridge).unwrap().unwrap();
        assert!(check_spine_partition(&with_bridge, s.x_order.vertices(), &s.y_set).is_ok());
        assert_eq!(s.y_set, vec![0, 3]);
    }

    #[test]
    fn split_search() {
        let d = make_digraph(3, &[(0, 1), (1, 0)]).unwrap();
        let spine = find_split_partition(&d).unwrap();
        assert_eq!(spine.y_set, vec![2]);
        let mut xs = spine.x_order.vertices().to_vec();
        xs.sort();
        assert_eq!(xs, vec![0, 1]);
        assert!(find_split_partition(&directed_cycle(5)).is_none());
        assert_eq!(
            find_split_partition(&Digraph::edgeless(1).unwrap()),
            Some(SpinePartition::new(vec![0], vec![]))
        );
        // 4-cycle underlying C4 is not split
        assert!(find_split_partition(&directed_cycle(4)).is_none());
    }

    #[test]
    fn zigzag_detection() {
        let d = directed_cycle(5);
        assert_eq!(
            zigzag_violation(&d, &c5_spine()).unwrap(),
            Some(ZigzagViolation { kind: ZigzagKind::EntersFirst, y: 0, position: None })
        );
        let d = make_digraph(7, &[(0, 1), (0, 5), (6, 1)]).unwrap();
        let spine = SpinePartition::new(vec![0, 1], vec![2, 3, 4, 5, 6]);
        assert_eq!(zigzag_violation(&d, &spine).unwrap(), None);
        let lone = SpinePartition::new(vec![0], vec![]);
        assert_eq!(zigzag_violation(&Digraph::edgeless(1).unwrap(), &lone).unwrap(), None);
        let empty = SpinePartition::new(Path::empty(), vec![0]);
        assert_eq!(zigzag_violation(&Digraph::edgeless(1).unwrap(), &empty), Err(RecognitionError::EmptyX));

        let zz = make_digraph(4, &[(0, 1), (1, 2), (1, 3), (3, 2)]).unwrap();
        let spine = SpinePartition::new(vec![0, 1, 2], vec![3]);
        let v = zigzag_violation(&zz, &spine).unwrap().unwrap();
        assert_eq!(v, ZigzagViolation { kind: ZigzagKind::Zigzag, y: 3, position: Some(1) });
        assert!(v.holds_in(&zz, &spine));
    }

    #[test]
    fn tightness() {
        let d = directed_cycle(5);
        assert_eq!(
            classify_tightness(&d, &c5_spine(), 1).unwrap(),
            Tightness::Loose(LooseWitness::Subset(vec![2]))
        );
        let d = make_digraph(3, &[(0, 1), (0, 2), (2, 1)]).unwrap();
        let spine = SpinePartition::new(vec![0, 1], vec![2]);
        assert_eq!(classify_tightness(&d, &spine, 1).unwrap(), Tightness::Tight);
        assert_eq!(
            classify_tightness(&d, &spine, 3).unwrap(),
            Tightness::Loose(LooseWitness::SmallX)
        );
        assert!(is_valid_loose_witness(&directed_cycle(5), &c5_spine(), 1, &LooseWitness::Subset(vec![2])));
        assert!(!is_valid_loose_witness(&directed_cycle(5), &c5_spine(), 1, &LooseWitness::Subset(vec![1])));
        assert!(!is_valid_loose_witness(&directed_cycle(5), &c5_spine(), 1, &LooseWitness::SmallX));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(40, 20), 137_846_528_820);
        assert_eq!(binomial(3, 4), 0);
    }
}
