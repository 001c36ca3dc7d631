//! Loop-free, parallel-free digraphs on dense vertex ids `0..n`, plus the
//! path and stable-set primitives everything else is built on.
//!
//! Adjacency is stored as one `u64` out-row and one in-row per vertex, so arc
//! membership and neighbourhood masks are O(1). This caps the vertex count at
//! [`MAX_VERTICES`].

use std::fmt;

use thiserror::Error;

/// Hard ceiling on the number of vertices (one bit per vertex in a `u64`).
pub const MAX_VERTICES: usize = 64;

/// Vertex set encoded as a bitmask.
pub type VertexMask = u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("loop arc ({0}, {0})")]
    LoopArc(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
}

/// An immutable digraph. 2-cycles are allowed; loops and parallel arcs are not.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<VertexMask>,
    inn: Vec<VertexMask>,
}

impl Digraph {
    /// Builds a digraph, rejecting loops, repeated arcs and out-of-range ids.
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self, DigraphError> {
        if n > MAX_VERTICES {
            return Err(DigraphError::TooManyVertices(n));
        }
        let mut out = vec![0u64; n];
        let mut inn = vec![0u64; n];
        for &(u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(DigraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(DigraphError::LoopArc(u));
            }
            if out[u] & bit(v) != 0 {
                return Err(DigraphError::DuplicateArc(u, v));
            }
            out[u] |= bit(v);
            inn[v] |= bit(u);
        }
        Ok(Self { n, out, inn })
    }

    /// The digraph with `n` vertices and no arcs.
    pub fn edgeless(n: usize) -> Result<Self, DigraphError> {
        Self::new(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Mask with every vertex set.
    pub fn full_mask(&self) -> VertexMask {
        full_mask(self.n)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|row| row.count_ones() as usize).sum()
    }

    /// All arcs `(tail, head)` in lexicographic order.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::with_capacity(self.arc_count());
        for u in self.vertices() {
            arcs.extend(iter_mask(self.out[u]).map(|v| (u, v)));
        }
        arcs
    }

    /// Whether `(u, v)` is an arc. Out-of-range ids are simply not arcs.
    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out[u] & bit(v) != 0
    }

    /// Adjacency in the underlying graph: `(u, v)` or `(v, u)` is an arc.
    pub fn adjacent(&self, u: usize, v: usize) -> Result<bool, DigraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.is_adjacent(u, v))
    }

    /// Unchecked variant of [`Digraph::adjacent`] for ids already known valid.
    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        (self.out[u] | self.inn[u]) & bit(v) != 0
    }

    #[inline]
    pub fn out_mask(&self, v: usize) -> VertexMask {
        self.out[v]
    }

    #[inline]
    pub fn in_mask(&self, v: usize) -> VertexMask {
        self.inn[v]
    }

    /// Neighbours of `v` in the underlying graph.
    #[inline]
    pub fn adj_mask(&self, v: usize) -> VertexMask {
        self.out[v] | self.inn[v]
    }

    /// Degree of `v` in the underlying simple graph.
    pub fn underlying_degree(&self, v: usize) -> usize {
        self.adj_mask(v).count_ones() as usize
    }

    /// True iff no two distinct members of `set` are adjacent.
    pub fn is_stable_set(&self, set: &[usize]) -> Result<bool, DigraphError> {
        for &v in set {
            self.check_vertex(v)?;
        }
        Ok(self.is_stable_mask(mask_of(set)))
    }

    #[inline]
    pub fn is_stable_mask(&self, mask: VertexMask) -> bool {
        iter_mask(mask).all(|v| self.adj_mask(v) & mask == 0)
    }

    /// True iff `seq` has distinct, in-range vertices and consecutive pairs are
    /// arcs. Empty and single-vertex sequences are paths.
    pub fn is_path(&self, seq: &[usize]) -> bool {
        let mut seen = 0u64;
        for &v in seq {
            if v >= self.n || seen & bit(v) != 0 {
                return false;
            }
            seen |= bit(v);
        }
        seq.windows(2).all(|w| self.has_arc(w[0], w[1]))
    }

    /// Subdigraph induced by `mask`, keeping the original ids.
    pub fn restrict(&self, mask: VertexMask) -> Digraph {
        let mut out = self.out.clone();
        let mut inn = self.inn.clone();
        for v in self.vertices() {
            if mask & bit(v) == 0 {
                out[v] = 0;
                inn[v] = 0;
            } else {
                out[v] &= mask;
                inn[v] &= mask;
            }
        }
        Digraph { n: self.n, out, inn }
    }

    fn check_vertex(&self, v: usize) -> Result<(), DigraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(DigraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs())
            .finish()
    }
}

/// Convenience constructor mirroring [`Digraph::new`].
pub fn make_digraph(n: usize, arcs: &[(usize, usize)]) -> Result<Digraph, DigraphError> {
    Digraph::new(n, arcs)
}

/// Directed cycle `0 -> 1 -> ... -> n-1 -> 0`.
pub fn directed_cycle(n: usize) -> Digraph {
    let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Digraph::new(n, &arcs).expect("cycle arcs are valid for n >= 2")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("paths overlap at vertex {0}")]
pub struct OverlapError(pub usize);

/// A vertex sequence intended to be a directed path. Validity against a host
/// digraph is checked separately with [`Digraph::is_path`].
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path(Vec<usize>);

impl Path {
    pub fn new(vertices: Vec<usize>) -> Self {
        Path(vertices)
    }

    pub fn empty() -> Self {
        Path(Vec::new())
    }

    pub fn single(v: usize) -> Self {
        Path(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    /// Number of vertices (not arcs).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    /// Terminal vertex.
    pub fn terminal(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// The first `len` vertices.
    pub fn prefix(&self, len: usize) -> Path {
        Path(self.0[..len].to_vec())
    }

    /// Vertices from position `start` (0-based) to the end.
    pub fn suffix_from(&self, start: usize) -> Path {
        Path(self.0[start..].to_vec())
    }

    pub fn mask(&self) -> VertexMask {
        mask_of(&self.0)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// `self` followed by `other`; the two must be vertex-disjoint.
    pub fn concat(&self, other: &Path) -> Result<Path, OverlapError> {
        if let Some(&v) = other.0.iter().find(|v| self.0.contains(v)) {
            return Err(OverlapError(v));
        }
        let mut seq = self.0.clone();
        seq.extend_from_slice(&other.0);
        Ok(Path(seq))
    }
}

impl From<Vec<usize>> for Path {
    fn from(v: Vec<usize>) -> Self {
        Path(v)
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[inline]
pub fn bit(v: usize) -> VertexMask {
    1u64 << v
}

pub fn full_mask(n: usize) -> VertexMask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub fn mask_of(vertices: &[usize]) -> VertexMask {
    vertices.iter().fold(0, |m, &v| m | bit(v))
}

/// Set bits of `mask` in increasing order.
pub fn iter_mask(mut mask: VertexMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn mask_to_vec(mask: VertexMask) -> Vec<usize> {
    iter_mask(mask).collect()
}
