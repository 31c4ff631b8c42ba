//! Canonical finite sets and functions, with the four (co)limits used by the
//! instance backends: products, coproducts, pullbacks and pushouts, together
//! with the mediator maps given by their universal properties.
//!
//! A set is always an initial segment `{0, .., n-1}` of the naturals and every
//! construction fixes one canonical enumeration order, so that repeated
//! computation of the same (co)limit yields literally equal encodings. All
//! comparisons downstream are plain structural equality on these encodings.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// The set `{0, .., size-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinSet {
    pub size: usize,
}

impl FinSet {
    pub fn new(size: usize) -> Self {
        FinSet { size }
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.size
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinSet({})", self.size)
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.size)
    }
}

/// A function between canonical finite sets, stored as its value table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinFun {
    pub dom: FinSet,
    pub cod: FinSet,
    pub table: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FinSetError {
    #[error("table entry {value} at index {index} exceeds codomain of size {cod}")]
    TableOutOfRange { index: usize, value: usize, cod: usize },
    #[error("table length {len} does not match domain of size {dom}")]
    TableLength { len: usize, dom: usize },
    #[error("codomain mismatch: {left} vs {right}")]
    CodMismatch { left: usize, right: usize },
    #[error("domain mismatch: {left} vs {right}")]
    DomMismatch { left: usize, right: usize },
    #[error("functions are not composable: codomain {mid_cod} vs domain {mid_dom}")]
    NotComposable { mid_cod: usize, mid_dom: usize },
    #[error("cone does not commute at element {at}: {lhs} vs {rhs}")]
    ConeMismatch { at: usize, lhs: usize, rhs: usize },
    #[error("cocone does not commute on class of element {at}: {lhs} vs {rhs}")]
    CoconeMismatch { at: usize, lhs: usize, rhs: usize },
}

impl FinFun {
    pub fn new(dom: FinSet, cod: FinSet, table: Vec<usize>) -> Result<Self, FinSetError> {
        if table.len() != dom.size {
            return Err(FinSetError::TableLength { len: table.len(), dom: dom.size });
        }
        for (index, &value) in table.iter().enumerate() {
            if value >= cod.size {
                return Err(FinSetError::TableOutOfRange { index, value, cod: cod.size });
            }
        }
        Ok(FinFun { dom, cod, table })
    }

    pub fn identity(set: FinSet) -> Self {
        FinFun { dom: set, cod: set, table: (0..set.size).collect() }
    }

    /// The unique map out of the empty set.
    pub fn empty_into(cod: FinSet) -> Self {
        FinFun { dom: FinSet::new(0), cod, table: Vec::new() }
    }

    /// The constant map onto the given element of a nonempty codomain.
    pub fn constant(dom: FinSet, cod: FinSet, value: usize) -> Result<Self, FinSetError> {
        FinFun::new(dom, cod, vec![value; dom.size])
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// Diagram-order composition: `self` first, then `g`.
    pub fn then(&self, g: &FinFun) -> Result<FinFun, FinSetError> {
        if self.cod != g.dom {
            return Err(FinSetError::NotComposable { mid_cod: self.cod.size, mid_dom: g.dom.size });
        }
        let table = self.table.iter().map(|&x| g.table[x]).collect();
        Ok(FinFun { dom: self.dom, cod: g.cod, table })
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size];
        for &v in &self.table {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom == self.cod && self.is_injective() && self.is_surjective()
    }

    /// Two-sided inverse of a bijection.
    pub fn inverse(&self) -> Option<FinFun> {
        if !self.is_bijective() {
            return None;
        }
        let mut table = vec![0; self.cod.size];
        for (i, &v) in self.table.iter().enumerate() {
            table[v] = i;
        }
        Some(FinFun { dom: self.cod, cod: self.dom, table })
    }

    /// All functions `dom -> cod`, in lexicographic table order.
    pub fn all(dom: FinSet, cod: FinSet) -> Vec<FinFun> {
        if dom.size == 0 {
            return vec![FinFun::empty_into(cod)];
        }
        if cod.size == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut table = vec![0usize; dom.size];
        loop {
            out.push(FinFun { dom, cod, table: table.clone() });
            let mut i = dom.size;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                table[i] += 1;
                if table[i] < cod.size {
                    break;
                }
                table[i] = 0;
            }
        }
    }
}

impl fmt::Debug for FinFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FinFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]:{}->{}",
            self.table.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
            self.dom.size, self.cod.size)
    }
}

/// Result of one of the four (co)limit constructions, with enough context to
/// mediate cones (for limits) or cocones (for colimits) through the apex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LimitResult {
    pub apex: FinSet,
    /// For pullbacks/products these point out of the apex; for pushouts and
    /// coproducts they point into it.
    pub legs: (FinFun, FinFun),
    mediation: Mediation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Mediation {
    /// Apex elements are matched pairs `(a, b)` in lexicographic order;
    /// `index_of[(a, b)]` recovers the apex index.
    Limit { pairs: Vec<(usize, usize)> },
    /// Apex elements are equivalence classes of the tagged disjoint union
    /// `cod(f) + cod(g)`; `class_of_left[c]` / `class_of_right[d]` map the
    /// component elements to their class.
    Colimit { class_of_left: Vec<usize>, class_of_right: Vec<usize> },
}

impl LimitResult {
    /// Apex elements of a limit as matched pairs, in enumeration order.
    pub fn pairs(&self) -> Option<&[(usize, usize)]> {
        match &self.mediation {
            Mediation::Limit { pairs } => Some(pairs),
            _ => None,
        }
    }

    /// Class maps of a colimit: where the two components land in the apex.
    pub fn class_maps(&self) -> Option<(&[usize], &[usize])> {
        match &self.mediation {
            Mediation::Colimit { class_of_left, class_of_right } => {
                Some((class_of_left, class_of_right))
            }
            _ => None,
        }
    }
}

/// Pullback of a cospan `f : A -> X <- B : g`. The apex is the set of pairs
/// `(a, b)` with `f(a) = g(b)`, ordered lexicographically and renumbered.
pub fn pullback(f: &FinFun, g: &FinFun) -> Result<LimitResult, FinSetError> {
    if f.cod != g.cod {
        return Err(FinSetError::CodMismatch { left: f.cod.size, right: g.cod.size });
    }
    let mut pairs = Vec::new();
    for a in 0..f.dom.size {
        for b in 0..g.dom.size {
            if f.table[a] == g.table[b] {
                pairs.push((a, b));
            }
        }
    }
    let apex = FinSet::new(pairs.len());
    let p = FinFun { dom: apex, cod: f.dom, table: pairs.iter().map(|&(a, _)| a).collect() };
    let q = FinFun { dom: apex, cod: g.dom, table: pairs.iter().map(|&(_, b)| b).collect() };
    Ok(LimitResult { apex, legs: (p, q), mediation: Mediation::Limit { pairs } })
}

/// Pushout of a span `f : A <- X -> B : g`. The apex is the quotient of the
/// tagged union `A + B` by the equivalence generated by `f(x) ~ g(x)`, with
/// classes numbered by first appearance of their least tagged element.
pub fn pushout(f: &FinFun, g: &FinFun) -> Result<LimitResult, FinSetError> {
    if f.dom != g.dom {
        return Err(FinSetError::DomMismatch { left: f.dom.size, right: g.dom.size });
    }
    let a = f.cod.size;
    let b = g.cod.size;
    let mut uf = UnionFind::new(a + b);
    for x in 0..f.dom.size {
        uf.union(f.table[x], a + g.table[x]);
    }
    // Renumber classes deterministically by first appearance.
    let mut class_index = vec![usize::MAX; a + b];
    let mut next = 0;
    for i in 0..a + b {
        let root = uf.find(i);
        if class_index[root] == usize::MAX {
            class_index[root] = next;
            next += 1;
        }
    }
    let apex = FinSet::new(next);
    let class_of_left: Vec<usize> = (0..a).map(|i| class_index[uf.find(i)]).collect();
    let class_of_right: Vec<usize> = (0..b).map(|j| class_index[uf.find(a + j)]).collect();
    let i = FinFun { dom: f.cod, cod: apex, table: class_of_left.clone() };
    let j = FinFun { dom: g.cod, cod: apex, table: class_of_right.clone() };
    Ok(LimitResult { apex, legs: (i, j), mediation: Mediation::Colimit { class_of_left, class_of_right } })
}

/// Cartesian product in lexicographic order: `(x, y)` is element `x*|Y| + y`.
pub fn product(x: FinSet, y: FinSet) -> LimitResult {
    let mut pairs = Vec::with_capacity(x.size * y.size);
    for a in 0..x.size {
        for b in 0..y.size {
            pairs.push((a, b));
        }
    }
    let apex = FinSet::new(pairs.len());
    let p = FinFun { dom: apex, cod: x, table: pairs.iter().map(|&(a, _)| a).collect() };
    let q = FinFun { dom: apex, cod: y, table: pairs.iter().map(|&(_, b)| b).collect() };
    LimitResult { apex, legs: (p, q), mediation: Mediation::Limit { pairs } }
}

/// Tagged coproduct: all of `X` first, then all of `Y`.
pub fn coproduct(x: FinSet, y: FinSet) -> LimitResult {
    let apex = FinSet::new(x.size + y.size);
    let class_of_left: Vec<usize> = (0..x.size).collect();
    let class_of_right: Vec<usize> = (x.size..x.size + y.size).collect();
    let i = FinFun { dom: x, cod: apex, table: class_of_left.clone() };
    let j = FinFun { dom: y, cod: apex, table: class_of_right.clone() };
    LimitResult { apex, legs: (i, j), mediation: Mediation::Colimit { class_of_left, class_of_right } }
}

/// The unique map `W -> apex` through a pullback (or product), given a cone
/// `(u : W -> A, v : W -> B)` commuting with the defining cospan.
pub fn pullback_mediate(limit: &LimitResult, u: &FinFun, v: &FinFun) -> Result<FinFun, FinSetError> {
    let pairs = match &limit.mediation {
        Mediation::Limit { pairs } => pairs,
        Mediation::Colimit { .. } => {
            return Err(FinSetError::DomMismatch { left: 0, right: 0 });
        }
    };
    if u.dom != v.dom {
        return Err(FinSetError::DomMismatch { left: u.dom.size, right: v.dom.size });
    }
    if u.cod != limit.legs.0.cod {
        return Err(FinSetError::CodMismatch { left: u.cod.size, right: limit.legs.0.cod.size });
    }
    if v.cod != limit.legs.1.cod {
        return Err(FinSetError::CodMismatch { left: v.cod.size, right: limit.legs.1.cod.size });
    }
    // Invert the pair enumeration for lookup.
    let mut index_of = std::collections::HashMap::new();
    for (i, &pr) in pairs.iter().enumerate() {
        index_of.insert(pr, i);
    }
    let mut table = Vec::with_capacity(u.dom.size);
    for w in 0..u.dom.size {
        match index_of.get(&(u.table[w], v.table[w])) {
            Some(&i) => table.push(i),
            None => {
                return Err(FinSetError::ConeMismatch { at: w, lhs: u.table[w], rhs: v.table[w] });
            }
        }
    }
    Ok(FinFun { dom: u.dom, cod: limit.apex, table })
}

/// The unique map `apex -> W` out of a pushout (or coproduct), given a cocone
/// `(u : A -> W, v : B -> W)` commuting with the defining span.
pub fn pushout_mediate(limit: &LimitResult, u: &FinFun, v: &FinFun) -> Result<FinFun, FinSetError> {
    let (class_of_left, class_of_right) = match &limit.mediation {
        Mediation::Colimit { class_of_left, class_of_right } => (class_of_left, class_of_right),
        Mediation::Limit { .. } => {
            return Err(FinSetError::DomMismatch { left: 0, right: 0 });
        }
    };
    if u.cod != v.cod {
        return Err(FinSetError::CodMismatch { left: u.cod.size, right: v.cod.size });
    }
    if u.dom != limit.legs.0.dom {
        return Err(FinSetError::DomMismatch { left: u.dom.size, right: limit.legs.0.dom.size });
    }
    if v.dom != limit.legs.1.dom {
        return Err(FinSetError::DomMismatch { left: v.dom.size, right: limit.legs.1.dom.size });
    }
    let mut table = vec![usize::MAX; limit.apex.size];
    let mut assign = |class: usize, value: usize, at: usize| -> Result<(), FinSetError> {
        if table[class] == usize::MAX {
            table[class] = value;
            Ok(())
        } else if table[class] != value {
            Err(FinSetError::CoconeMismatch { at, lhs: table[class], rhs: value })
        } else {
            Ok(())
        }
    };
    for (a, &class) in class_of_left.iter().enumerate() {
        assign(class, u.table[a], a)?;
    }
    for (b, &class) in class_of_right.iter().enumerate() {
        assign(class, v.table[b], b)?;
    }
    // Every class contains at least one tagged element, so the table is total.
    debug_assert!(table.iter().all(|&t| t != usize::MAX));
    Ok(FinFun { dom: limit.apex, cod: u.cod, table })
}

/// Union-find with path compression, used to build pushout classes.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, i: usize, j: usize) {
        let a = self.find(i);
        let b = self.find(j);
        if a != b {
            // Attach the larger root to the smaller so class numbering by
            // first appearance stays stable under different merge orders.
            if a < b {
                self.parent[b] = a;
            } else {
                self.parent[a] = b;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent pullback oracle: enumerate all pairs and filter.
    fn pullback_oracle(f: &FinFun, g: &FinFun) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for a in 0..f.dom.size {
            for b in 0..g.dom.size {
                if f.table[a] == g.table[b] {
                    pairs.push((a, b));
                }
            }
        }
        pairs
    }

    /// Independent pushout oracle: naive transitive closure partitioning of
    /// the tagged union, no union-find.
    fn pushout_class_count_oracle(f: &FinFun, g: &FinFun) -> usize {
        let n = f.cod.size + g.cod.size;
        // relation matrix, reflexive closure
        let mut related = vec![vec![false; n]; n];
        for i in 0..n {
            related[i][i] = true;
        }
        for x in 0..f.dom.size {
            let i = f.table[x];
            let j = f.cod.size + g.table[x];
            related[i][j] = true;
            related[j][i] = true;
        }
        // transitive closure
        loop {
            let mut changed = false;
            for i in 0..n {
                for j in 0..n {
                    if related[i][j] {
                        for k in 0..n {
                            if related[j][k] && !related[i][k] {
                                related[i][k] = true;
                                changed = true;
                            }
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        // count distinct rows reachable as class representatives
        let mut classes: Vec<Vec<bool>> = Vec::new();
        for i in 0..n {
            if !classes.iter().any(|row| row[i]) {
                classes.push(related[i].clone());
            }
        }
        classes.len()
    }

    #[test]
    fn pullback_over_singleton_is_product() {
        // f, g both the unique maps 2 -> 1: apex 4, pairs in lex order
        let f = FinFun::constant(FinSet::new(2), FinSet::new(1), 0).unwrap();
        let result = pullback(&f, &f).unwrap();
        assert_eq!(result.apex.size, 4);
        assert_eq!(result.pairs().unwrap(), &[(0, 0), (0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn pullback_of_identities_is_diagonal() {
        let id = FinFun::identity(FinSet::new(2));
        let result = pullback(&id, &id).unwrap();
        assert_eq!(result.apex.size, 2);
        assert_eq!(result.pairs().unwrap(), &[(0, 0), (1, 1)]);
    }

    #[test]
    fn pullback_three_to_two() {
        // Frozen from the pair-enumeration oracle: matches are
        // (0,0), (1,0), (2,1), (2,2).
        let f = FinFun::new(FinSet::new(3), FinSet::new(2), vec![0, 0, 1]).unwrap();
        let g = FinFun::new(FinSet::new(3), FinSet::new(2), vec![0, 1, 1]).unwrap();
        assert_eq!(pullback_oracle(&f, &g), vec![(0, 0), (1, 0), (2, 1), (2, 2)]);
        let result = pullback(&f, &g).unwrap();
        assert_eq!(result.apex.size, 4);
        assert_eq!(result.pairs().unwrap(), &[(0, 0), (1, 0), (2, 1), (2, 2)]);
    }

    #[test]
    fn pushout_single_merge() {
        // X = 1 picking element 0 of two copies of 2: classes {0,0'},{1},{1'}
        let f = FinFun::constant(FinSet::new(1), FinSet::new(2), 0).unwrap();
        let result = pushout(&f, &f).unwrap();
        assert_eq!(result.apex.size, 3);
        assert_eq!(pushout_class_count_oracle(&f, &f), 3);
        assert_eq!(result.legs.0.table, vec![0, 1]);
        assert_eq!(result.legs.1.table, vec![0, 2]);
    }

    #[test]
    fn pushout_under_empty_is_coproduct() {
        let f = FinFun::empty_into(FinSet::new(2));
        let g = FinFun::empty_into(FinSet::new(3));
        let result = pushout(&f, &g).unwrap();
        assert_eq!(result.apex.size, 5);
        let co = coproduct(FinSet::new(2), FinSet::new(3));
        assert_eq!(result.legs, co.legs);
    }

    #[test]
    fn pushout_of_identities() {
        let id = FinFun::identity(FinSet::new(3));
        let result = pushout(&id, &id).unwrap();
        assert_eq!(result.apex.size, 3);
        assert!(result.legs.0.is_identity());
    }

    #[test]
    fn product_and_coproduct_basics() {
        let p = product(FinSet::new(2), FinSet::new(3));
        assert_eq!(p.apex.size, 6);
        assert_eq!(p.pairs().unwrap()[0], (0, 0));
        assert_eq!(p.pairs().unwrap()[1], (0, 1));
        let c = coproduct(FinSet::new(2), FinSet::new(3));
        assert_eq!(c.apex.size, 5);
        assert_eq!(c.legs.0.table, vec![0, 1]);
        assert_eq!(c.legs.1.table, vec![2, 3, 4]);
        assert_eq!(product(FinSet::new(0), FinSet::new(5)).apex.size, 0);
    }

    #[test]
    fn mediating_own_legs_gives_identity() {
        let f = FinFun::new(FinSet::new(3), FinSet::new(2), vec![0, 0, 1]).unwrap();
        let g = FinFun::new(FinSet::new(3), FinSet::new(2), vec![0, 1, 1]).unwrap();
        let pb = pullback(&f, &g).unwrap();
        let m = pullback_mediate(&pb, &pb.legs.0, &pb.legs.1).unwrap();
        assert!(m.is_identity());
        let po = pushout(&f, &g).unwrap();
        let m = pushout_mediate(&po, &po.legs.0, &po.legs.1).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn mediate_point_into_pullback() {
        // W = 1 mapping to (0,0) in the 2 -> 1 <- 2 pullback picks index 0.
        let f = FinFun::constant(FinSet::new(2), FinSet::new(1), 0).unwrap();
        let pb = pullback(&f, &f).unwrap();
        let u = FinFun::constant(FinSet::new(1), FinSet::new(2), 0).unwrap();
        let m = pullback_mediate(&pb, &u, &u).unwrap();
        assert_eq!(m.table, vec![0]);
    }

    #[test]
    fn mediation_out_of_empty_apex() {
        let f = FinFun::empty_into(FinSet::new(0));
        let po = pushout(&f, &f).unwrap();
        assert_eq!(po.apex.size, 0);
        let u = FinFun::empty_into(FinSet::new(2));
        let m = pushout_mediate(&po, &u, &u).unwrap();
        assert_eq!(m.table, Vec::<usize>::new());
    }

    #[test]
    fn non_commuting_cone_is_rejected() {
        let id = FinFun::identity(FinSet::new(2));
        let pb = pullback(&id, &id).unwrap();
        let u = FinFun::new(FinSet::new(1), FinSet::new(2), vec![0]).unwrap();
        let v = FinFun::new(FinSet::new(1), FinSet::new(2), vec![1]).unwrap();
        let err = pullback_mediate(&pb, &u, &v).unwrap_err();
        assert!(matches!(err, FinSetError::ConeMismatch { at: 0, .. }));
    }

    #[test]
    fn compose_identity_equal() {
        let swap = FinFun::new(FinSet::new(2), FinSet::new(2), vec![1, 0]).unwrap();
        assert!(swap.then(&swap).unwrap().is_identity());
        assert_eq!(FinFun::identity(FinSet::new(0)).table, Vec::<usize>::new());
        let a = FinFun::new(FinSet::new(2), FinSet::new(2), vec![0, 0]).unwrap();
        let b = FinFun::new(FinSet::new(2), FinSet::new(2), vec![0, 1]).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn permutation_table_composition() {
        let p = FinFun::new(FinSet::new(3), FinSet::new(3), vec![1, 2, 0]).unwrap();
        assert_eq!(p.then(&p).unwrap().table, vec![2, 0, 1]);
    }

    fn arb_finfun(max: usize) -> impl Strategy<Value = FinFun> {
        (0..=max, 1..=max).prop_flat_map(|(d, c)| {
            proptest::collection::vec(0..c, d)
                .prop_map(move |table| FinFun::new(FinSet::new(d), FinSet::new(c), table).unwrap())
        })
    }

    fn arb_cospan(max: usize) -> impl Strategy<Value = (FinFun, FinFun)> {
        (0..=max, 0..=max, 1..=max).prop_flat_map(|(a, b, c)| {
            (proptest::collection::vec(0..c, a), proptest::collection::vec(0..c, b)).prop_map(
                move |(t1, t2)| {
                    (
                        FinFun::new(FinSet::new(a), FinSet::new(c), t1).unwrap(),
                        FinFun::new(FinSet::new(b), FinSet::new(c), t2).unwrap(),
                    )
                },
            )
        })
    }

    proptest! {
        #[test]
        fn pullback_matches_oracle((f, g) in arb_cospan(5)) {
            let result = pullback(&f, &g).unwrap();
            let oracle = pullback_oracle(&f, &g);
            prop_assert_eq!(result.apex.size, oracle.len());
            prop_assert_eq!(result.pairs().unwrap(), &oracle[..]);
            // legs commute with the cospan
            prop_assert_eq!(result.legs.0.then(&f).unwrap(), result.legs.1.then(&g).unwrap());
        }

        #[test]
        fn pushout_matches_closure_oracle((f, g) in arb_cospan(5)) {
            // reuse the cospan generator as a span generator by treating the
            // shared codomain as the shared domain
            let span_f = FinFun::new(f.dom, f.cod, f.table.clone()).unwrap();
            let _ = span_f;
            let x = f.dom;
            if x != g.dom { return Ok(()); }
            let result = pushout(&f, &g).unwrap();
            prop_assert_eq!(result.apex.size, pushout_class_count_oracle(&f, &g));
            prop_assert_eq!(result.legs.0.clone().then(&FinFun::identity(result.apex)).unwrap(), result.legs.0.clone());
            // legs coequalize
            prop_assert_eq!(f.then(&result.legs.0).unwrap(), g.then(&result.legs.1).unwrap());
        }

        #[test]
        fn pullback_universal_property((f, g) in arb_cospan(4), w in 0usize..=3) {
            let pb = pullback(&f, &g).unwrap();
            let wset = FinSet::new(w);
            // every commuting cone mediates uniquely
            for u in FinFun::all(wset, f.dom) {
                for v in FinFun::all(wset, g.dom) {
                    let commutes = u.then(&f).unwrap() == v.then(&g).unwrap();
                    let mediated = pullback_mediate(&pb, &u, &v);
                    if commutes {
                        let m = mediated.unwrap();
                        prop_assert_eq!(m.then(&pb.legs.0).unwrap(), u.clone());
                        prop_assert_eq!(m.then(&pb.legs.1).unwrap(), v.clone());
                        // uniqueness: any map with the same leg composites equals m
                        for cand in FinFun::all(wset, pb.apex) {
                            if cand.then(&pb.legs.0).unwrap() == u
                                && cand.then(&pb.legs.1).unwrap() == v {
                                prop_assert_eq!(&cand, &m);
                            }
                        }
                    } else {
                        prop_assert!(mediated.is_err());
                    }
                }
            }
        }

        #[test]
        fn product_is_pullback_over_terminal(x in 0usize..=4, y in 0usize..=4) {
            let xs = FinSet::new(x);
            let ys = FinSet::new(y);
            let to_pt_x = FinFun::constant(xs, FinSet::new(1), 0).unwrap();
            let to_pt_y = FinFun::constant(ys, FinSet::new(1), 0).unwrap();
            let via_pullback = pullback(&to_pt_x, &to_pt_y).unwrap();
            let direct = product(xs, ys);
            prop_assert_eq!(via_pullback.apex, direct.apex);
            prop_assert_eq!(via_pullback.legs, direct.legs);
        }

        #[test]
        fn coproduct_is_pushout_under_initial(x in 0usize..=4, y in 0usize..=4) {
            let xs = FinSet::new(x);
            let ys = FinSet::new(y);
            let from_empty_x = FinFun::empty_into(xs);
            let from_empty_y = FinFun::empty_into(ys);
            let via_pushout = pushout(&from_empty_x, &from_empty_y).unwrap();
            let direct = coproduct(xs, ys);
            prop_assert_eq!(via_pushout.apex, direct.apex);
            prop_assert_eq!(via_pushout.legs, direct.legs);
        }

        #[test]
        fn canonical_determinism(f in arb_finfun(5)) {
            let g = f.clone();
            prop_assert_eq!(pullback(&f, &g).unwrap(), pullback(&f, &g).unwrap());
            let h = FinFun::identity(f.dom);
            let sp = (f.clone(), h);
            prop_assert_eq!(pushout(&sp.0, &sp.1).unwrap(), pushout(&sp.0, &sp.1).unwrap());
        }
    }
}
