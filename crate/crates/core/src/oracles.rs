//! Exact brute-force values of π_k, α_k, λ, λ_k and χ_k for small digraphs,
//! and the conjecture checks built on them.
//!
//! Nothing here calls into the construction or recognition code; the only
//! shared dependency is [`Digraph`].

use thiserror::Error;

use crate::digraph::{bit, iter_mask, Digraph, VertexMask};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what}: n = {n} exceeds the oracle cap {cap}")]
    TooLarge { what: &'static str, n: usize, cap: usize },
    #[error("{what}: more than {limit} search states")]
    BudgetExceeded { what: &'static str, limit: u64 },
    #[error("k must be at least 1")]
    InvalidK,
}

/// Search limits for one oracle call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Vertex cap for π_k, α_k, λ_k and χ_k.
    pub max_n: usize,
    /// Vertex cap for λ.
    pub max_n_lambda: usize,
    /// Node-expansion cap.
    pub max_states: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self { max_n: 9, max_n_lambda: 12, max_states: 200_000_000 }
    }
}

impl OracleBudget {
    /// Default budget with a different vertex cap for the k-parameterised oracles.
    pub fn with_max_n(max_n: usize) -> Self {
        Self { max_n, ..Self::default() }
    }
}

struct Counter {
    what: &'static str,
    used: u64,
    limit: u64,
}

impl Counter {
    fn new(what: &'static str, budget: &OracleBudget) -> Self {
        Self { what, used: 0, limit: budget.max_states }
    }

    #[inline]
    fn tick(&mut self) -> Result<(), OracleError> {
        self.used += 1;
        if self.used > self.limit {
            Err(OracleError::BudgetExceeded { what: self.what, limit: self.limit })
        } else {
            Ok(())
        }
    }
}

fn guard(what: &'static str, d: &Digraph, cap: usize, k: Option<usize>) -> Result<(), OracleError> {
    if k == Some(0) {
        return Err(OracleError::InvalidK);
    }
    if d.n() > cap {
        return Err(OracleError::TooLarge { what, n: d.n(), cap });
    }
    Ok(())
}

/// `traceable[mask]`: whether `D[mask]` has a Hamiltonian path (the empty set
/// counts). Held-Karp style DP over `(mask, last vertex)`.
fn traceable_table(d: &Digraph, counter: &mut Counter) -> Result<Vec<bool>, OracleError> {
    let n = d.n();
    let size = 1usize << n;
    // ends[mask] = set of vertices v such that some path covering mask ends at v
    let mut ends = vec![0 as VertexMask; size];
    for v in 0..n {
        ends[1 << v] = bit(v);
    }
    for mask in 1..size as VertexMask {
        let e = ends[mask as usize];
        if e == 0 {
            continue;
        }
        for v in iter_mask(e) {
            counter.tick()?;
            for w in iter_mask(d.out_mask(v) & !mask) {
                ends[(mask | bit(w)) as usize] |= bit(w);
            }
        }
    }
    Ok(ends.iter().enumerate().map(|(m, &e)| m == 0 || e != 0).collect())
}

/// π_k: minimum of `Σ min(|P|, k)` over all path partitions.
///
/// Memoised on the uncovered set: the path through the smallest uncovered
/// vertex ranges over every traceable subset containing it.
pub fn pi_k_oracle(d: &Digraph, k: usize) -> Result<usize, OracleError> {
    pi_k_oracle_with(d, k, &OracleBudget::default())
}

pub fn pi_k_oracle_with(d: &Digraph, k: usize, budget: &OracleBudget) -> Result<usize, OracleError> {
    guard("pi_k", d, budget.max_n, Some(k))?;
    let mut counter = Counter::new("pi_k", budget);
    let traceable = traceable_table(d, &mut counter)?;
    Ok(min_cover(d.full_mask(), k, &traceable, &mut counter)?[d.full_mask() as usize])
}

/// best[mask] for every `mask ⊆ full`, computed bottom-up.
fn min_cover(full: VertexMask, k: usize, traceable: &[bool], counter: &mut Counter) -> Result<Vec<usize>, OracleError> {
    let size = full as usize + 1;
    let mut best = vec![usize::MAX; size];
    best[0] = 0;
    for mask in 1..size {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // sub ranges over subsets of `rest`; the path is sub | low
        let mut sub = rest;
        let mut value = usize::MAX;
        loop {
            counter.tick()?;
            let part = sub | low;
            if traceable[part] {
                let cost = (part.count_ones() as usize).min(k) + best[mask ^ part];
                value = value.min(cost);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        best[mask] = value;
    }
    Ok(best)
}

/// Unmemoised π_k: explicit enumeration of every path through the smallest
/// uncovered vertex, grown in both directions. Used to cross-check
/// [`pi_k_oracle`] at small n.
pub fn pi_k_oracle_naive(d: &Digraph, k: usize) -> Result<usize, OracleError> {
    let budget = OracleBudget::with_max_n(8);
    guard("pi_k_naive", d, budget.max_n, Some(k))?;
    let mut counter = Counter::new("pi_k_naive", &budget);
    naive_cover(d, d.full_mask(), k, &mut counter)
}

fn naive_cover(d: &Digraph, uncovered: VertexMask, k: usize, counter: &mut Counter) -> Result<usize, OracleError> {
    if uncovered == 0 {
        return Ok(0);
    }
    let v = uncovered.trailing_zeros() as usize;
    let mut best = usize::MAX;
    let mut path = std::collections::VecDeque::from([v]);
    grow(d, uncovered, k, bit(v), &mut path, &mut best, counter)?;
    Ok(best)
}

fn grow(
    d: &Digraph,
    uncovered: VertexMask,
    k: usize,
    used: VertexMask,
    path: &mut std::collections::VecDeque<usize>,
    best: &mut usize,
    counter: &mut Counter,
) -> Result<(), OracleError> {
    counter.tick()?;
    let here = path.len().min(k) + naive_cover(d, uncovered & !used, k, counter)?;
    *best = (*best).min(here);
    let back = *path.back().expect("nonempty");
    for w in iter_mask(d.out_mask(back) & uncovered & !used) {
        path.push_back(w);
        grow(d, uncovered, k, used | bit(w), path, best, counter)?;
        path.pop_back();
    }
    let front = *path.front().expect("nonempty");
    for w in iter_mask(d.in_mask(front) & uncovered & !used) {
        path.push_front(w);
        grow(d, uncovered, k, used | bit(w), path, best, counter)?;
        path.pop_front();
    }
    Ok(())
}

/// α_k: maximum total size of k pairwise-disjoint stable sets.
///
/// Each vertex is left uncoloured or put in one of the k classes; a new class
/// may only be opened after all lower-numbered ones, and branches that cannot
/// beat the incumbent are cut.
pub fn alpha_k_oracle(d: &Digraph, k: usize) -> Result<usize, OracleError> {
    alpha_k_oracle_with(d, k, &OracleBudget::default())
}

pub fn alpha_k_oracle_with(d: &Digraph, k: usize, budget: &OracleBudget) -> Result<usize, OracleError> {
    guard("alpha_k", d, budget.max_n, Some(k))?;
    let mut search = AlphaSearch {
        d,
        k,
        classes: Vec::with_capacity(k),
        best: 0,
        counter: Counter::new("alpha_k", budget),
    };
    search.assign(0, 0)?;
    Ok(search.best)
}

struct AlphaSearch<'a> {
    d: &'a Digraph,
    k: usize,
    classes: Vec<VertexMask>,
    best: usize,
    counter: Counter,
}

impl AlphaSearch<'_> {
    fn assign(&mut self, v: usize, colored: usize) -> Result<(), OracleError> {
        self.counter.tick()?;
        let n = self.d.n();
        if v == n {
            self.best = self.best.max(colored);
            return Ok(());
        }
        if colored + (n - v) <= self.best {
            return Ok(());
        }
        let nb = self.d.adj_mask(v);
        for c in 0..self.classes.len() {
            if self.classes[c] & nb == 0 {
                self.classes[c] |= bit(v);
                self.assign(v + 1, colored + 1)?;
                self.classes[c] &= !bit(v);
            }
        }
        if self.classes.len() < self.k {
            self.classes.push(bit(v));
            self.assign(v + 1, colored + 1)?;
            self.classes.pop();
        }
        self.assign(v + 1, colored)
    }
}

/// λ: number of vertices on a longest path, by DFS over simple paths.
pub fn lambda_oracle(d: &Digraph) -> Result<usize, OracleError> {
    lambda_oracle_with(d, &OracleBudget::default())
}

pub fn lambda_oracle_with(d: &Digraph, budget: &OracleBudget) -> Result<usize, OracleError> {
    guard("lambda", d, budget.max_n_lambda, None)?;
    let mut counter = Counter::new("lambda", budget);
    let mut best = 0;
    for v in d.vertices() {
        longest_from(d, v, bit(v), 1, &mut best, &mut counter)?;
        if best == d.n() {
            break;
        }
    }
    Ok(best)
}

fn longest_from(
    d: &Digraph,
    last: usize,
    used: VertexMask,
    len: usize,
    best: &mut usize,
    counter: &mut Counter,
) -> Result<(), OracleError> {
    counter.tick()?;
    *best = (*best).max(len);
    for w in iter_mask(d.out_mask(last) & !used) {
        longest_from(d, w, used | bit(w), len + 1, best, counter)?;
    }
    Ok(())
}

/// λ_k: maximum total size of k vertex-disjoint (possibly empty) paths.
pub fn lambda_k_oracle(d: &Digraph, k: usize) -> Result<usize, OracleError> {
    lambda_k_oracle_with(d, k, &OracleBudget::default())
}

pub fn lambda_k_oracle_with(d: &Digraph, k: usize, budget: &OracleBudget) -> Result<usize, OracleError> {
    guard("lambda_k", d, budget.max_n, Some(k))?;
    let mut counter = Counter::new("lambda_k", budget);
    let traceable = traceable_table(d, &mut counter)?;
    let full = d.full_mask() as usize;
    // most[mask] = largest total of j disjoint paths inside mask, for j = 1..k
    let mut most: Vec<usize> = (0..=full)
        .map(|m| if traceable[m] { m.count_ones() as usize } else { 0 })
        .collect();
    // close under submasks: most[mask] = longest path inside mask
    for mask in 1..=full {
        for v in iter_mask(mask as VertexMask) {
            most[mask] = most[mask].max(most[mask & !(1usize << v)]);
        }
    }
    let single = most.clone();
    for _ in 1..k.min(d.n()) {
        let mut next = vec![0usize; full + 1];
        for mask in 0..=full {
            let mut sub = mask;
            let mut value = 0;
            loop {
                counter.tick()?;
                value = value.max(single[sub] + most[mask ^ sub]);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
            next[mask] = value;
        }
        most = next;
    }
    Ok(most[full])
}

/// χ_k: minimum of `Σ min(|C|, k)` over all partitions into stable sets.
///
/// Vertices are placed in increasing id into an existing compatible class or
/// a new one (classes are thus opened in order). The partial cost never
/// decreases, so it bounds the branch.
pub fn chi_k_oracle(d: &Digraph, k: usize) -> Result<usize, OracleError> {
    chi_k_oracle_with(d, k, &OracleBudget::default())
}

pub fn chi_k_oracle_with(d: &Digraph, k: usize, budget: &OracleBudget) -> Result<usize, OracleError> {
    guard("chi_k", d, budget.max_n, Some(k))?;
    let mut search = ChiSearch {
        d,
        k,
        classes: Vec::new(),
        best: d.n(),
        counter: Counter::new("chi_k", budget),
    };
    search.place(0, 0)?;
    Ok(search.best)
}

struct ChiSearch<'a> {
    d: &'a Digraph,
    k: usize,
    classes: Vec<VertexMask>,
    best: usize,
    counter: Counter,
}

impl ChiSearch<'_> {
    fn place(&mut self, v: usize, cost: usize) -> Result<(), OracleError> {
        self.counter.tick()?;
        if cost >= self.best && v < self.d.n() {
            return Ok(());
        }
        if v == self.d.n() {
            self.best = self.best.min(cost);
            return Ok(());
        }
        let nb = self.d.adj_mask(v);
        for c in 0..self.classes.len() {
            if self.classes[c] & nb == 0 {
                let extra = usize::from((self.classes[c].count_ones() as usize) < self.k);
                self.classes[c] |= bit(v);
                self.place(v + 1, cost + extra)?;
                self.classes[c] &= !bit(v);
            }
        }
        self.classes.push(bit(v));
        self.place(v + 1, cost + 1)?;
        self.classes.pop();
        Ok(())
    }
}

/// One row of a conjecture check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundCheck {
    pub k: usize,
    /// π_k or χ_k.
    pub lower: usize,
    /// α_k or λ_k.
    pub upper: usize,
    pub holds: bool,
}

/// `π_k ≤ α_k` for each `k` in `ks`.
pub fn check_linial(d: &Digraph, ks: &[usize]) -> Result<Vec<BoundCheck>, OracleError> {
    ks.iter()
        .map(|&k| {
            let pi = pi_k_oracle(d, k)?;
            let alpha = alpha_k_oracle(d, k)?;
            Ok(BoundCheck { k, lower: pi, upper: alpha, holds: pi <= alpha })
        })
        .collect()
}

/// `χ_k ≤ λ_k` for each `k` in `ks`.
pub fn check_dual(d: &Digraph, ks: &[usize]) -> Result<Vec<BoundCheck>, OracleError> {
    ks.iter()
        .map(|&k| {
            let chi = chi_k_oracle(d, k)?;
            let lambda = lambda_k_oracle(d, k)?;
            Ok(BoundCheck { k, lower: chi, upper: lambda, holds: chi <= lambda })
        })
        .collect()
}
