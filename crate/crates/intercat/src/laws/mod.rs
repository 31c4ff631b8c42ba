//! Coherence-law verification.
//!
//! The checker enumerates composable tuples from an instance (exhaustively
//! below a per-law budget, seeded-sampled above it) and evaluates every
//! coherence equation as a literal equality of canonical transversal
//! composites, with all implicit re-associations inserted explicitly as
//! structural cells. Failures carry witnesses: the input tuple and the two
//! disagreeing composites.

mod rules;

use crate::model::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

pub use rules::Ops;

/// Closed enumeration of the checkable laws. Tags `C21`..`C32` are the
/// twelve interchange coherence conditions; `M5`..`M14` the morphism
/// conditions; `CELL-V`/`CELL-H` the two double-cell condition groups;
/// `CUBE-COMMUTE` the commuting-cube hexagon.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LawId {
    Boundary,
    StrictT,
    MiddleFourH,
    MiddleFourV,
    WdHPentagon,
    WdHTriangle,
    WdVPentagon,
    WdVTriangle,
    NatKappaH,
    NatLambdaH,
    NatRhoH,
    NatKappaV,
    NatLambdaV,
    NatRhoV,
    NatChi,
    NatMu,
    NatDelta,
    NatTau,
    Coherence(u8),
    Morphism(u8),
    CellV,
    CellH,
    CubeCommute,
}

impl LawId {
    pub fn tag(&self) -> String {
        match self {
            LawId::Boundary => "BOUNDARY".into(),
            LawId::StrictT => "STRICT-T".into(),
            LawId::MiddleFourH => "MIDDLE-FOUR-H".into(),
            LawId::MiddleFourV => "MIDDLE-FOUR-V".into(),
            LawId::WdHPentagon => "WD-H-PENTAGON".into(),
            LawId::WdHTriangle => "WD-H-TRIANGLE".into(),
            LawId::WdVPentagon => "WD-V-PENTAGON".into(),
            LawId::WdVTriangle => "WD-V-TRIANGLE".into(),
            LawId::NatKappaH => "NAT-KAPPA-H".into(),
            LawId::NatLambdaH => "NAT-LAMBDA-H".into(),
            LawId::NatRhoH => "NAT-RHO-H".into(),
            LawId::NatKappaV => "NAT-KAPPA-V".into(),
            LawId::NatLambdaV => "NAT-LAMBDA-V".into(),
            LawId::NatRhoV => "NAT-RHO-V".into(),
            LawId::NatChi => "NAT-CHI".into(),
            LawId::NatMu => "NAT-MU".into(),
            LawId::NatDelta => "NAT-DELTA".into(),
            LawId::NatTau => "NAT-TAU".into(),
            LawId::Coherence(n) => format!("C{}", n),
            LawId::Morphism(n) => format!("M{}", n),
            LawId::CellV => "CELL-V".into(),
            LawId::CellH => "CELL-H".into(),
            LawId::CubeCommute => "CUBE-COMMUTE".into(),
        }
    }

    pub fn coherence_ids() -> impl Iterator<Item = LawId> {
        (21..=32).map(LawId::Coherence)
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

/// A failed instance of a law: the inputs and both composites, serialized
/// canonically so the failure re-evaluates from the witness alone.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    fn new<I: fmt::Debug>(inputs: &[I], lhs: impl fmt::Debug, rhs: impl fmt::Debug) -> Self {
        Witness {
            inputs: inputs.iter().map(|i| format!("{:?}", i)).collect(),
            lhs: format!("{:?}", lhs),
            rhs: format!("{:?}", rhs),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LawReport {
    pub law: LawId,
    pub checked: usize,
    pub failures: Vec<Witness>,
}

impl LawReport {
    pub fn new(law: LawId) -> Self {
        LawReport { law, checked: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(&mut self, other: LawReport) {
        assert_eq!(self.law, other.law);
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CheckConfig {
    /// Per-law tuple budget; spaces at or below it are checked exhaustively,
    /// larger ones are sampled.
    pub budget: usize,
    pub seed: u64,
    /// Cap on recorded witnesses per law.
    pub max_witnesses: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig { budget: 2000, seed: 0, max_witnesses: 4 }
    }
}

impl CheckConfig {
    pub fn with_budget(budget: usize, seed: u64) -> Self {
        CheckConfig { budget, seed, ..Default::default() }
    }

    fn rng_for(&self, law: LawId, salt: u64) -> StdRng {
        let mut h = std::collections::hash_map::DefaultHasher::new();
        law.tag().hash(&mut h);
        salt.hash(&mut h);
        StdRng::seed_from_u64(self.seed ^ h.finish())
    }
}

/// Aggregated result of a full run.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FullReport {
    pub instance: String,
    pub reports: Vec<LawReport>,
    pub budget: usize,
    pub seed: u64,
}

impl FullReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }

    pub fn failing_laws(&self) -> Vec<LawId> {
        self.reports.iter().filter(|r| !r.passed()).map(|r| r.law).collect()
    }

    /// Laws for which no instance tuple was found; these are flagged by the
    /// renderers rather than silently passed.
    pub fn unchecked_laws(&self) -> Vec<LawId> {
        self.reports.iter().filter(|r| r.checked == 0).map(|r| r.law).collect()
    }

    pub fn report_for(&self, law: LawId) -> Option<&LawReport> {
        self.reports.iter().find(|r| r.law == law)
    }
}

// ---- tuple generation ----

/// Items that sit in a composition grid: keyed boundaries in two directions.
pub(crate) trait GridItem: Clone + fmt::Debug + Hash + Eq {
    type HKey: Eq + Hash + Clone;
    type VKey: Eq + Hash + Clone;
    fn left_key(&self) -> Self::HKey;
    fn right_key(&self) -> Self::HKey;
    fn top_key(&self) -> Self::VKey;
    fn bottom_key(&self) -> Self::VKey;
}

impl GridItem for BasicCell {
    type HKey = VertArrow;
    type VKey = HorArrow;
    fn left_key(&self) -> VertArrow {
        self.left.clone()
    }
    fn right_key(&self) -> VertArrow {
        self.right.clone()
    }
    fn top_key(&self) -> HorArrow {
        self.top.clone()
    }
    fn bottom_key(&self) -> HorArrow {
        self.bottom.clone()
    }
}

impl GridItem for Cube {
    type HKey = VertCell;
    type VKey = HorCell;
    fn left_key(&self) -> VertCell {
        self.left.clone()
    }
    fn right_key(&self) -> VertCell {
        self.right.clone()
    }
    fn top_key(&self) -> HorCell {
        self.top.clone()
    }
    fn bottom_key(&self) -> HorCell {
        self.bottom.clone()
    }
}

fn tuple_hash<T: Hash>(tuple: &[T]) -> u64 {
    let mut h = std::collections::hash_map::DefaultHasher::new();
    tuple.hash(&mut h);
    h.finish()
}

/// Row-major `rows x cols` grids of items whose boundaries match up;
/// exhaustive if the space fits in the budget, seeded-sampled otherwise.
pub(crate) fn grids_of<T: GridItem>(
    items: &[T],
    rows: usize,
    cols: usize,
    budget: usize,
    rng: &mut StdRng,
) -> Vec<Vec<T>> {
    let mut by_left: HashMap<T::HKey, Vec<usize>> = HashMap::new();
    let mut by_top: HashMap<T::VKey, Vec<usize>> = HashMap::new();
    let mut by_top_left: HashMap<(T::VKey, T::HKey), Vec<usize>> = HashMap::new();
    for (i, item) in items.iter().enumerate() {
        by_left.entry(item.left_key()).or_default().push(i);
        by_top.entry(item.top_key()).or_default().push(i);
        by_top_left.entry((item.top_key(), item.left_key())).or_default().push(i);
    }
    let candidates = |grid: &[usize], pos: usize| -> Vec<usize> {
        let (r, c) = (pos / cols, pos % cols);
        if r == 0 && c == 0 {
            return (0..items.len()).collect();
        }
        if r == 0 {
            let key = items[grid[pos - 1]].right_key();
            return by_left.get(&key).cloned().unwrap_or_default();
        }
        if c == 0 {
            let key = items[grid[pos - cols]].bottom_key();
            return by_top.get(&key).cloned().unwrap_or_default();
        }
        let key = (items[grid[pos - cols]].bottom_key(), items[grid[pos - 1]].right_key());
        by_top_left.get(&key).cloned().unwrap_or_default()
    };

    // exhaustive DFS, bailing out once the budget is exceeded
    let total = rows * cols;
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut exhausted = true;
    fn dfs(
        pos: usize,
        total: usize,
        budget: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        candidates: &dyn Fn(&[usize], usize) -> Vec<usize>,
    ) -> bool {
        if pos == total {
            out.push(stack.clone());
            return out.len() <= budget;
        }
        for i in candidates(stack, pos) {
            stack.push(i);
            let ok = dfs(pos + 1, total, budget, stack, out, candidates);
            stack.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    if !dfs(0, total, budget, &mut stack, &mut out, &candidates) {
        exhausted = false;
    }
    if exhausted {
        return out.into_iter().map(|idx| idx.iter().map(|&i| items[i].clone()).collect()).collect();
    }

    // sampled mode: random walks through the index structure
    let mut seen: HashSet<u64> = HashSet::new();
    let mut result: Vec<Vec<T>> = Vec::new();
    let attempts = budget.saturating_mul(30).max(100);
    for _ in 0..attempts {
        if result.len() >= budget {
            break;
        }
        let mut grid: Vec<usize> = Vec::with_capacity(total);
        let mut ok = true;
        for pos in 0..total {
            let cands = candidates(&grid, pos);
            if cands.is_empty() {
                ok = false;
                break;
            }
            grid.push(cands[rng.gen_range(0..cands.len())]);
        }
        if !ok {
            continue;
        }
        let tuple: Vec<T> = grid.iter().map(|&i| items[i].clone()).collect();
        if seen.insert(tuple_hash(&tuple)) {
            result.push(tuple);
        }
    }
    result
}

/// Transversal chains of the given length; same exhaustive-or-sampled
/// semantics as [`grids_of`].
pub(crate) fn chains_of<T, K>(
    items: &[T],
    len: usize,
    budget: usize,
    rng: &mut StdRng,
    out_key: impl Fn(&T) -> K,
    in_key: impl Fn(&T) -> K,
) -> Vec<Vec<T>>
where
    T: Clone + Hash + Eq,
    K: Eq + Hash + Clone,
{
    let mut by_in: HashMap<K, Vec<usize>> = HashMap::new();
    for (i, item) in items.iter().enumerate() {
        by_in.entry(in_key(item)).or_default().push(i);
    }
    let empty: Vec<usize> = Vec::new();
    // exhaustive
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut overflow = false;
    fn dfs<T, K: Eq + Hash>(
        pos: usize,
        len: usize,
        budget: usize,
        items: &[T],
        by_in: &HashMap<K, Vec<usize>>,
        out_key: &dyn Fn(&T) -> K,
        empty: &Vec<usize>,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        if pos == len {
            out.push(stack.clone());
            return out.len() <= budget;
        }
        let cands: &Vec<usize> = if pos == 0 {
            // all items; handled by caller loop below
            unreachable!()
        } else {
            by_in.get(&out_key(&items[stack[pos - 1]])).unwrap_or(empty)
        };
        for &i in cands {
            stack.push(i);
            let ok = dfs(pos + 1, len, budget, items, by_in, out_key, empty, stack, out);
            stack.pop();
            if !ok {
                return false;
            }
        }
        true
    }
    'outer: for first in 0..items.len() {
        stack.push(first);
        let ok = if len == 1 {
            out.push(stack.clone());
            out.len() <= budget
        } else {
            dfs(1, len, budget, items, &by_in, &out_key, &empty, &mut stack, &mut out)
        };
        stack.pop();
        if !ok {
            overflow = true;
            break 'outer;
        }
    }
    if !overflow {
        return out.into_iter().map(|idx| idx.iter().map(|&i| items[i].clone()).collect()).collect();
    }
    // sampled
    let mut seen: HashSet<u64> = HashSet::new();
    let mut result = Vec::new();
    let attempts = budget.saturating_mul(30).max(100);
    for _ in 0..attempts {
        if result.len() >= budget {
            break;
        }
        let mut chain: Vec<usize> = Vec::with_capacity(len);
        let mut ok = true;
        for pos in 0..len {
            if pos == 0 {
                if items.is_empty() {
                    ok = false;
                    break;
                }
                chain.push(rng.gen_range(0..items.len()));
            } else {
                let cands = by_in.get(&out_key(&items[chain[pos - 1]])).unwrap_or(&empty);
                if cands.is_empty() {
                    ok = false;
                    break;
                }
                chain.push(cands[rng.gen_range(0..cands.len())]);
            }
        }
        if !ok {
            continue;
        }
        let tuple: Vec<T> = chain.iter().map(|&i| items[i].clone()).collect();
        if seen.insert(tuple_hash(&tuple)) {
            result.push(tuple);
        }
    }
    result
}

// ---- checking driver ----

/// Outcome of evaluating one law on one tuple.
pub(crate) enum Eval {
    /// Both composites computed; equality decided.
    Compared(bool, Witness),
    /// The tuple relied on an operation the instance does not define
    /// (truncated tables); not counted.
    Skipped,
    /// The instance misbehaved structurally on a composable tuple.
    Broken(Witness),
}

pub(crate) fn run_law<T: fmt::Debug>(
    report: &mut LawReport,
    tuples: &[Vec<T>],
    max_witnesses: usize,
    mut eval: impl FnMut(&[T]) -> Eval,
) {
    for tuple in tuples {
        match eval(tuple) {
            Eval::Compared(equal, witness) => {
                report.checked += 1;
                if !equal && report.failures.len() < max_witnesses {
                    report.failures.push(witness);
                }
            }
            Eval::Skipped => {}
            Eval::Broken(witness) => {
                report.checked += 1;
                if report.failures.len() < max_witnesses {
                    report.failures.push(witness);
                }
            }
        }
    }
}

/// Turn an operation result into `Skipped` for table truncations and
/// `Broken` otherwise.
pub(crate) fn eval_error<I: fmt::Debug>(inputs: &[I], err: &OpError) -> Eval {
    match err {
        OpError::MissingEntry { .. } | OpError::Unknown { .. } => Eval::Skipped,
        other => Eval::Broken(Witness::new(inputs, format!("<error: {}>", other), "<n/a>")),
    }
}

/// Verifies weak-double-category structure in one direction: pentagon,
/// triangle (with invertibility of the structural cells), naturality of the
/// associativity and unit comparisons, strict transversal laws and
/// middle-four interchange.
pub fn check_weak_double(
    inst: &dyn InterInstance,
    direction: Direction,
    config: &CheckConfig,
) -> Vec<LawReport> {
    rules::weak_double(inst, direction, config)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Horizontal,
    Vertical,
}

/// Verifies the four naturality squares of the interchangers.
pub fn check_interchanger_naturality(
    inst: &dyn InterInstance,
    config: &CheckConfig,
) -> Vec<LawReport> {
    rules::interchanger_naturality(inst, config)
}

/// Verifies the twelve interchange coherence conditions C21..C32.
pub fn check_duoidal_coherence(inst: &dyn InterInstance, config: &CheckConfig) -> Vec<LawReport> {
    rules::coherence(inst, config)
}

/// Runs every checker and aggregates. Left-chirality instances are checked
/// through their transversal reversal, which is a right intercategory with
/// the same laws.
pub fn check_all(inst: &dyn InterInstance, config: &CheckConfig) -> FullReport {
    if inst.chirality() == Chirality::Left {
        let reversed = crate::dualities::reverse_transversal_arc(inst);
        let mut rep = check_all_right(reversed.as_ref(), config);
        rep.instance = inst.name();
        return rep;
    }
    check_all_right(inst, config)
}

fn check_all_right(inst: &dyn InterInstance, config: &CheckConfig) -> FullReport {
    let mut reports: Vec<LawReport> = Vec::new();
    reports.push(rules::boundary(inst, config));
    reports.extend(check_weak_double(inst, Direction::Horizontal, config));
    reports.extend(check_weak_double(inst, Direction::Vertical, config));
    reports.extend(check_interchanger_naturality(inst, config));
    reports.extend(check_duoidal_coherence(inst, config));
    // merge reports that were produced by several checkers (STRICT-T and
    // middle-four are exercised by both directions)
    let mut merged: Vec<LawReport> = Vec::new();
    for rep in reports {
        if let Some(existing) = merged.iter_mut().find(|r| r.law == rep.law) {
            existing.merge(rep);
        } else {
            merged.push(rep);
        }
    }
    FullReport { instance: inst.name(), reports: merged, budget: config.budget, seed: config.seed }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::duoidal::DuoidalInstance;
    use crate::instances::span_cospan::SpanCospanInstance;

    #[test]
    fn duoidal_two_passes_all_laws() {
        let inst = DuoidalInstance::new(2);
        let config = CheckConfig::with_budget(20_000, 7);
        let report = check_all(&inst, &config);
        for r in &report.reports {
            assert!(r.passed(), "law {} failed: {:?}", r.law, r.failures.first());
            assert!(r.checked > 0, "law {} never checked", r.law);
        }
    }

    #[test]
    fn span_cospan_two_passes_sampled_laws() {
        let inst = SpanCospanInstance::new(2);
        let config = CheckConfig::with_budget(60, 7);
        let report = check_all(&inst, &config);
        for r in &report.reports {
            assert!(r.passed(), "law {} failed: {:?}", r.law, r.failures.first());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let inst = DuoidalInstance::new(2);
        let config = CheckConfig::with_budget(500, 42);
        let a = check_all(&inst, &config);
        let b = check_all(&inst, &config);
        assert_eq!(serde_json::to_string(&a.reports).unwrap(), serde_json::to_string(&b.reports).unwrap());
    }
}
