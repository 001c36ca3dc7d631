//! Path partitions, k-partial colorings, their norms, validators and the
//! certificate object tying one of each together.
//!
//! Validators never stop at the first problem: every violation found is
//! returned, which makes fuzz triage easier.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::digraph::{bit, iter_mask, Digraph, Path, VertexMask};

/// Vertex-disjoint paths intended to cover every vertex of a host digraph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PathPartition {
    pub paths: Vec<Path>,
}

impl PathPartition {
    pub fn new(paths: Vec<Path>) -> Self {
        Self { paths }
    }

    /// `Σ min(|P|, k)` over the member paths.
    pub fn k_norm(&self, k: usize) -> usize {
        k_norm(self, k)
    }

    /// Number of nonempty paths.
    pub fn size(&self) -> usize {
        self.paths.iter().filter(|p| !p.is_empty()).count()
    }
}

/// At most `k` pairwise-disjoint stable sets. Empty classes are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPartialColoring {
    pub k: usize,
    pub classes: Vec<Vec<usize>>,
}

impl KPartialColoring {
    pub fn new(k: usize, classes: Vec<Vec<usize>>) -> Self {
        Self { k, classes }
    }

    pub fn weight(&self) -> usize {
        coloring_weight(self)
    }
}

/// A partition of all vertices into stable sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub classes: Vec<Vec<usize>>,
}

/// Exactly `k` pairwise-disjoint paths; empty paths are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KPath {
    pub paths: Vec<Path>,
}

pub fn k_norm(partition: &PathPartition, k: usize) -> usize {
    partition.paths.iter().map(|p| p.len().min(k)).sum()
}

pub fn coloring_weight(coloring: &KPartialColoring) -> usize {
    coloring.classes.iter().map(Vec::len).sum()
}

pub fn coloring_k_norm(coloring: &Coloring, k: usize) -> usize {
    coloring.classes.iter().map(|c| c.len().min(k)).sum()
}

pub fn k_path_weight(kpath: &KPath) -> usize {
    kpath.paths.iter().map(Path::len).sum()
}

/// One reason a partition, coloring or certificate fails to check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange { vertex: usize },
    NotAPath { index: usize },
    RepeatedVertex { vertex: usize },
    Uncovered { vertices: Vec<usize> },
    TooManyClasses { classes: usize, k: usize },
    NotStable { class: usize, u: usize, v: usize },
    VertexCountMismatch { certificate: usize, digraph: usize },
    KMismatch { certificate: usize, coloring: usize },
    InvalidK,
    NormMismatch { recorded: usize, actual: usize },
    WeightMismatch { recorded: usize, actual: usize },
    InequalityFails { k_norm: usize, weight: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} out of range"),
            Violation::NotAPath { index } => write!(f, "path #{index} is not a directed path"),
            Violation::RepeatedVertex { vertex } => write!(f, "vertex {vertex} repeated"),
            Violation::Uncovered { vertices } => write!(f, "vertices {vertices:?} uncovered"),
            Violation::TooManyClasses { classes, k } => {
                write!(f, "{classes} classes > k={k}")
            }
            Violation::NotStable { class, u, v } => {
                write!(f, "class #{class} not stable: {u},{v} adjacent")
            }
            Violation::VertexCountMismatch { certificate, digraph } => {
                write!(f, "certificate n={certificate} but digraph n={digraph}")
            }
            Violation::KMismatch { certificate, coloring } => {
                write!(f, "certificate k={certificate} but coloring k={coloring}")
            }
            Violation::InvalidK => write!(f, "k must be positive"),
            Violation::NormMismatch { recorded, actual } => {
                write!(f, "norm mismatch: recorded {recorded}, actual {actual}")
            }
            Violation::WeightMismatch { recorded, actual } => {
                write!(f, "weight mismatch: recorded {recorded}, actual {actual}")
            }
            Violation::InequalityFails { k_norm, weight } => {
                write!(f, "k_norm {k_norm} > weight {weight}")
            }
        }
    }
}

fn into_result(violations: Vec<Violation>) -> Result<(), Vec<Violation>> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

pub fn validate_path_partition(d: &Digraph, partition: &PathPartition) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    let mut covered: VertexMask = 0;
    for (index, path) in partition.paths.iter().enumerate() {
        let mut in_range = true;
        for &v in path.vertices() {
            if v >= d.n() {
                violations.push(Violation::VertexOutOfRange { vertex: v });
                in_range = false;
                continue;
            }
            if covered & bit(v) != 0 {
                violations.push(Violation::RepeatedVertex { vertex: v });
            }
            covered |= bit(v);
        }
        if in_range && !d.is_path(path.vertices()) {
            violations.push(Violation::NotAPath { index });
        }
    }
    let missing = d.full_mask() & !covered;
    if missing != 0 {
        violations.push(Violation::Uncovered {
            vertices: iter_mask(missing).collect(),
        });
    }
    into_result(violations)
}

pub fn validate_k_partial_coloring(
    d: &Digraph,
    coloring: &KPartialColoring,
) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    if coloring.k == 0 {
        violations.push(Violation::InvalidK);
    }
    if coloring.classes.len() > coloring.k {
        violations.push(Violation::TooManyClasses {
            classes: coloring.classes.len(),
            k: coloring.k,
        });
    }
    let mut seen: VertexMask = 0;
    for (class_index, class) in coloring.classes.iter().enumerate() {
        let mut members = Vec::with_capacity(class.len());
        for &v in class {
            if v >= d.n() {
                violations.push(Violation::VertexOutOfRange { vertex: v });
                continue;
            }
            if seen & bit(v) != 0 {
                violations.push(Violation::RepeatedVertex { vertex: v });
            }
            seen |= bit(v);
            members.push(v);
        }
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if u != v && d.is_adjacent(u, v) {
                    violations.push(Violation::NotStable { class: class_index, u, v });
                }
            }
        }
    }
    into_result(violations)
}

/// Which construction produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseTag {
    #[serde(rename = "small-x")]
    SmallX,
    #[serde(rename = "long-path")]
    LongPath,
    #[serde(rename = "fishbone")]
    Fishbone,
    #[serde(rename = "loose")]
    Loose,
}

impl CaseTag {
    pub const ALL: [CaseTag; 4] = [CaseTag::SmallX, CaseTag::LongPath, CaseTag::Fishbone, CaseTag::Loose];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::SmallX => "small-x",
            CaseTag::LongPath => "long-path",
            CaseTag::Fishbone => "fishbone",
            CaseTag::Loose => "loose",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A path partition and a k-partial coloring of the same digraph with
/// `k_norm(partition) <= weight(coloring)`.
///
/// Everything is stored as explicit vertex lists, so the certificate can be
/// checked from the digraph alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub n: usize,
    pub k: usize,
    #[serde(rename = "case")]
    pub case_tag: CaseTag,
    pub partition: Vec<Vec<usize>>,
    pub coloring: Vec<Vec<usize>>,
    pub k_norm: usize,
    pub weight: usize,
    /// Informational: "given" or "found".
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spine_source: Option<String>,
}

impl Certificate {
    pub fn new(n: usize, k: usize, case_tag: CaseTag, partition: &PathPartition, coloring: &KPartialColoring) -> Self {
        Self {
            n,
            k,
            case_tag,
            partition: partition.paths.iter().map(|p| p.vertices().to_vec()).collect(),
            coloring: coloring.classes.clone(),
            k_norm: k_norm(partition, k),
            weight: coloring_weight(coloring),
            spine_source: None,
        }
    }

    pub fn path_partition(&self) -> PathPartition {
        PathPartition::new(self.partition.iter().cloned().map(Path::new).collect())
    }

    pub fn k_partial_coloring(&self) -> KPartialColoring {
        KPartialColoring::new(self.k, self.coloring.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Independent re-check: both halves validate, the recorded numbers
/// recompute exactly, and `k_norm <= weight`.
pub fn verify_certificate(d: &Digraph, cert: &Certificate) -> Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    if cert.n != d.n() {
        violations.push(Violation::VertexCountMismatch { certificate: cert.n, digraph: d.n() });
    }
    if cert.k == 0 {
        violations.push(Violation::InvalidK);
    }
    let partition = cert.path_partition();
    if let Err(v) = validate_path_partition(d, &partition) {
        violations.extend(v);
    }
    let coloring = cert.k_partial_coloring();
    if let Err(v) = validate_k_partial_coloring(d, &coloring) {
        violations.extend(v.into_iter().filter(|v| *v != Violation::InvalidK));
    }
    let actual_norm = k_norm(&partition, cert.k);
    if actual_norm != cert.k_norm {
        violations.push(Violation::NormMismatch { recorded: cert.k_norm, actual: actual_norm });
    }
    let actual_weight = coloring_weight(&coloring);
    if actual_weight != cert.weight {
        violations.push(Violation::WeightMismatch { recorded: cert.weight, actual: actual_weight });
    }
    if actual_norm > actual_weight {
        violations.push(Violation::InequalityFails { k_norm: actual_norm, weight: actual_weight });
    }
    into_result(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{directed_cycle, make_digraph};
    use proptest::prelude::*;

    fn partition(paths: &[&[usize]]) -> PathPartition {
        PathPartition::new(paths.iter().map(|p| Path::new(p.to_vec())).collect())
    }

    #[test]
    fn k_norm_examples() {
        assert_eq!(k_norm(&partition(&[&[0, 1, 2, 3, 4]]), 2), 2);
        let p = partition(&[&[0, 1], &[2], &[3, 4]]);
        assert_eq!(k_norm(&p, 1), 3);
        assert_eq!(k_norm(&p, 5), 5);
    }

    #[test]
    fn weight_examples() {
        assert_eq!(coloring_weight(&KPartialColoring::new(2, vec![vec![0, 2], vec![1, 3]])), 4);
        assert_eq!(coloring_weight(&KPartialColoring::new(3, vec![vec![], vec![], vec![]])), 0);
        assert_eq!(coloring_weight(&KPartialColoring::new(1, vec![vec![0]])), 1);
    }

    #[test]
    fn coloring_norm_examples() {
        let c = Coloring { classes: vec![vec![0, 2], vec![1, 3], vec![4]] };
        assert_eq!(coloring_k_norm(&c, 1), 3);
        assert_eq!(coloring_k_norm(&c, 2), 5);
        assert_eq!(coloring_k_norm(&Coloring { classes: vec![vec![0]] }, 7), 1);
    }

    #[test]
    fn k_path_examples() {
        assert_eq!(k_path_weight(&KPath { paths: vec![Path::new(vec![0, 1, 2, 3, 4])] }), 5);
        assert_eq!(k_path_weight(&KPath { paths: vec![Path::empty(), Path::empty()] }), 0);
        assert_eq!(
            k_path_weight(&KPath { paths: vec![Path::new(vec![0, 1]), Path::single(3)] }),
            3
        );
    }

    #[test]
    fn path_partition_validation() {
        let d = directed_cycle(5);
        assert!(validate_path_partition(&d, &partition(&[&[0, 1, 2, 3, 4]])).is_ok());
        let errs = validate_path_partition(&d, &partition(&[&[0, 1], &[1, 2], &[3], &[4]])).unwrap_err();
        assert_eq!(errs, vec![Violation::RepeatedVertex { vertex: 1 }]);
        let errs = validate_path_partition(&d, &partition(&[&[0, 1]])).unwrap_err();
        assert_eq!(errs, vec![Violation::Uncovered { vertices: vec![2, 3, 4] }]);
        // all problems are reported at once
        let errs = validate_path_partition(&d, &partition(&[&[0, 2], &[2]])).unwrap_err();
        assert_eq!(errs.len(), 3);
    }

    #[test]
    fn coloring_validation() {
        let d = directed_cycle(5);
        assert!(validate_k_partial_coloring(&d, &KPartialColoring::new(2, vec![vec![0, 2], vec![1, 3]])).is_ok());
        let errs = validate_k_partial_coloring(&d, &KPartialColoring::new(2, vec![vec![0, 1]])).unwrap_err();
        assert_eq!(errs, vec![Violation::NotStable { class: 0, u: 0, v: 1 }]);
        let errs = validate_k_partial_coloring(&d, &KPartialColoring::new(1, vec![vec![0], vec![2]])).unwrap_err();
        assert_eq!(errs, vec![Violation::TooManyClasses { classes: 2, k: 1 }]);
        let errs = validate_k_partial_coloring(&d, &KPartialColoring::new(2, vec![vec![0], vec![0]])).unwrap_err();
        assert_eq!(errs, vec![Violation::RepeatedVertex { vertex: 0 }]);
    }

    fn c5_cert() -> Certificate {
        Certificate::new(
            5,
            1,
            CaseTag::LongPath,
            &partition(&[&[0, 1, 2, 3, 4]]),
            &KPartialColoring::new(1, vec![vec![0]]),
        )
    }

    #[test]
    fn verify_detects_tampering() {
        let d = directed_cycle(5);
        let cert = c5_cert();
        assert_eq!((cert.k_norm, cert.weight), (1, 1));
        assert!(verify_certificate(&d, &cert).is_ok());

        let mut tampered = cert.clone();
        tampered.k_norm += 1;
        let errs = verify_certificate(&d, &tampered).unwrap_err();
        assert_eq!(errs, vec![Violation::NormMismatch { recorded: 2, actual: 1 }]);

        let mut unstable = cert.clone();
        unstable.coloring = vec![vec![0, 1]];
        unstable.weight = 2;
        let errs = verify_certificate(&d, &unstable).unwrap_err();
        assert!(errs.contains(&Violation::NotStable { class: 0, u: 0, v: 1 }));

        let mut wrong_n = cert;
        wrong_n.n = 6;
        assert!(verify_certificate(&d, &wrong_n).is_err());
    }

    #[test]
    fn verify_rejects_inequality_failure() {
        let d = make_digraph(2, &[]).unwrap();
        let cert = Certificate::new(
            2,
            1,
            CaseTag::Loose,
            &partition(&[&[0], &[1]]),
            &KPartialColoring::new(1, vec![vec![0]]),
        );
        let errs = verify_certificate(&d, &cert).unwrap_err();
        assert_eq!(errs, vec![Violation::InequalityFails { k_norm: 2, weight: 1 }]);
    }

    #[test]
    fn json_field_names() {
        let mut cert = c5_cert();
        cert.coloring.push(vec![]);
        let value: serde_json::Value = serde_json::from_str(&cert.to_json()).unwrap();
        let keys: Vec<_> = value.as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys.len(), 7);
        for key in ["n", "k", "case", "partition", "coloring", "k_norm", "weight"] {
            assert!(value.get(key).is_some(), "missing {key}");
        }
        assert_eq!(value["case"], "long-path");
        assert_eq!(value["coloring"][1], serde_json::json!([]));
        assert_eq!(Certificate::from_json(&cert.to_json()).unwrap(), cert);
    }

    proptest! {
        #[test]
        fn k_norm_monotone_and_bounded(sizes in proptest::collection::vec(1usize..6, 1..6)) {
            let mut next = 0;
            let paths: Vec<Path> = sizes.iter().map(|&s| {
                let p = Path::new((next..next + s).collect());
                next += s;
                p
            }).collect();
            let part = PathPartition::new(paths);
            let total: usize = sizes.iter().sum();
            prop_assert_eq!(k_norm(&part, 1), part.size());
            let max = *sizes.iter().max().unwrap();
            prop_assert_eq!(k_norm(&part, max), total);
            for k in 1..=max + 1 {
                prop_assert!(k_norm(&part, k) <= k_norm(&part, k + 1));
            }
        }
    }
}
