//! The eight sorts of an intercategory, their boundary calculus, and the
//! abstract instance interface that backends implement.
//!
//! An intercategory has objects, three kinds of arrow (transversal,
//! horizontal, vertical), three kinds of 2-dimensional cell (horizontal,
//! vertical, basic) and cubes. Transversal composition is strict; horizontal
//! and vertical composition are weak, with associativity and unit comparisons
//! supplied as transversally invertible special cells. The two weak
//! directions interact through four directed interchangers:
//!
//! ```text
//! chi   : (a | b) / (c | d) -> (a / c) | (b / d)
//! mu    : id_v / id_w       -> id_{v . w}
//! delta : Id_{h | k}        -> Id_h | Id_k
//! tau   : Id_{id_A}         -> id_{Id_A}
//! ```
//!
//! where `|` is horizontal and `/` vertical composition, `id` the horizontal
//! and `Id` the vertical weak identity. None of the four is required to be
//! invertible.
//!
//! Every element value carries its full boundary, so boundary bookkeeping is
//! decidable without consulting the instance, and equality of elements is
//! structural equality of canonical encodings.

use crate::finset::{FinFun, FinSet};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

/// Backend-specific payload identifying an element within its sort.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Val {
    Unit,
    Nat(u64),
    Str(String),
    List(Vec<Val>),
}

impl Val {
    pub fn nat(n: usize) -> Val {
        Val::Nat(n as u64)
    }

    pub fn str(s: impl Into<String>) -> Val {
        Val::Str(s.into())
    }

    pub fn list(items: Vec<Val>) -> Val {
        Val::List(items)
    }

    pub fn from_finset(s: FinSet) -> Val {
        Val::Nat(s.size as u64)
    }

    pub fn from_finfun(f: &FinFun) -> Val {
        Val::List(vec![
            Val::nat(f.dom.size),
            Val::nat(f.cod.size),
            Val::List(f.table.iter().map(|&v| Val::nat(v)).collect()),
        ])
    }

    pub fn as_finset(&self) -> Option<FinSet> {
        match self {
            Val::Nat(n) => Some(FinSet::new(*n as usize)),
            _ => None,
        }
    }

    pub fn as_finfun(&self) -> Option<FinFun> {
        match self {
            Val::List(items) => match items.as_slice() {
                [Val::Nat(d), Val::Nat(c), Val::List(tbl)] => {
                    let table = tbl
                        .iter()
                        .map(|v| match v {
                            Val::Nat(n) => Some(*n as usize),
                            _ => None,
                        })
                        .collect::<Option<Vec<_>>>()?;
                    FinFun::new(FinSet::new(*d as usize), FinSet::new(*c as usize), table).ok()
                }
                _ => None,
            },
            _ => None,
        }
    }
}

impl fmt::Debug for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Unit => write!(f, "*"),
            Val::Nat(n) => write!(f, "{}", n),
            Val::Str(s) => write!(f, "{}", s),
            Val::List(items) => {
                write!(f, "(")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{:?}", item)?;
                }
                write!(f, ")")
            }
        }
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self)
    }
}

/// An object of the instance.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ObjId(pub Val);

impl fmt::Debug for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

macro_rules! arrow_sort {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
        pub struct $name {
            pub id: Val,
            pub src: ObjId,
            pub tgt: ObjId,
        }

        impl $name {
            pub fn new(id: Val, src: ObjId, tgt: ObjId) -> Self {
                Self { id, src, tgt }
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{:?}[{:?}->{:?}]", self.id, self.src, self.tgt)
            }
        }
    };
}

arrow_sort!(
    /// Arrow in the strict direction; transversal composition of these is
    /// strictly associative and unital.
    TransArrow
);
arrow_sort!(
    /// Arrow in the first weak direction, composed by `h_comp`.
    HorArrow
);
arrow_sort!(
    /// Arrow in the second weak direction, composed by `v_comp`.
    VertArrow
);

/// Cell bounded by two horizontal arrows (top, bottom) and two transversal
/// arrows (left, right). Transversally these are morphisms top -> bottom.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HorCell {
    pub id: Val,
    pub top: HorArrow,
    pub bottom: HorArrow,
    pub left: TransArrow,
    pub right: TransArrow,
}

/// Cell bounded by two vertical arrows (left, right) and two transversal
/// arrows (top, bottom). Transversally these are morphisms left -> right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertCell {
    pub id: Val,
    pub left: VertArrow,
    pub right: VertArrow,
    pub top: TransArrow,
    pub bottom: TransArrow,
}

/// Square cell bounded by horizontal arrows (top, bottom) and vertical
/// arrows (left, right); the square all the weak structure lives on.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasicCell {
    pub id: Val,
    pub top: HorArrow,
    pub bottom: HorArrow,
    pub left: VertArrow,
    pub right: VertArrow,
}

/// A 3-dimensional cell, read transversally as a morphism back -> front.
/// Its six faces are two basic cells, two horizontal cells and two vertical
/// cells that agree along shared edges.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cube {
    pub id: Val,
    pub back: BasicCell,
    pub front: BasicCell,
    pub top: HorCell,
    pub bottom: HorCell,
    pub left: VertCell,
    pub right: VertCell,
}

impl fmt::Debug for HorCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{:?}=>{:?}]", self.id, self.top.id, self.bottom.id)
    }
}

impl fmt::Debug for VertCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{:?}=>{:?}]", self.id, self.left.id, self.right.id)
    }
}

impl fmt::Debug for BasicCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}[t:{:?} b:{:?} l:{:?} r:{:?}]",
            self.id, self.top.id, self.bottom.id, self.left.id, self.right.id
        )
    }
}

impl fmt::Debug for Cube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{:?}=>{:?}]", self.id, self.back, self.front)
    }
}

/// Direction of the interchanger `chi`. Built-in instances are right;
/// left instances arise only through the table loader.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Chirality {
    Right,
    Left,
}

#[derive(Debug, Error, Clone)]
pub enum OpError {
    #[error("not composable ({op}): {lhs} vs {rhs}")]
    NotComposable { op: &'static str, lhs: String, rhs: String },
    #[error("unknown element in {op}: {what}")]
    Unknown { op: &'static str, what: String },
    #[error("no table entry for {op} at {what}")]
    MissingEntry { op: &'static str, what: String },
    #[error("boundary violation in {op}: {what}")]
    Boundary { op: &'static str, what: String },
    #[error("internal error in {op}: {what}")]
    Internal { op: &'static str, what: String },
}

impl OpError {
    pub fn not_composable(op: &'static str, lhs: impl fmt::Debug, rhs: impl fmt::Debug) -> Self {
        OpError::NotComposable { op, lhs: format!("{:?}", lhs), rhs: format!("{:?}", rhs) }
    }

    pub fn unknown(op: &'static str, what: impl fmt::Debug) -> Self {
        OpError::Unknown { op, what: format!("{:?}", what) }
    }

    pub fn missing(op: &'static str, what: impl fmt::Debug) -> Self {
        OpError::MissingEntry { op, what: format!("{:?}", what) }
    }

    pub fn internal(op: &'static str, what: impl fmt::Display) -> Self {
        OpError::Internal { op, what: what.to_string() }
    }
}

pub type OpResult<T> = Result<T, OpError>;

/// Boundary validation for each sort. These encode the bookkeeping rules the
/// geometry imposes; operation results must always satisfy them.
pub mod validate {
    use super::*;

    pub fn hor_cell(c: &HorCell) -> Result<(), String> {
        if c.left.src != c.top.src {
            return Err(format!("hor cell {:?}: left.src != top.src", c.id));
        }
        if c.right.src != c.top.tgt {
            return Err(format!("hor cell {:?}: right.src != top.tgt", c.id));
        }
        if c.left.tgt != c.bottom.src {
            return Err(format!("hor cell {:?}: left.tgt != bottom.src", c.id));
        }
        if c.right.tgt != c.bottom.tgt {
            return Err(format!("hor cell {:?}: right.tgt != bottom.tgt", c.id));
        }
        Ok(())
    }

    pub fn vert_cell(c: &VertCell) -> Result<(), String> {
        if c.top.src != c.left.src {
            return Err(format!("vert cell {:?}: top.src != left.src", c.id));
        }
        if c.top.tgt != c.right.src {
            return Err(format!("vert cell {:?}: top.tgt != right.src", c.id));
        }
        if c.bottom.src != c.left.tgt {
            return Err(format!("vert cell {:?}: bottom.src != left.tgt", c.id));
        }
        if c.bottom.tgt != c.right.tgt {
            return Err(format!("vert cell {:?}: bottom.tgt != right.tgt", c.id));
        }
        Ok(())
    }

    pub fn basic_cell(c: &BasicCell) -> Result<(), String> {
        if c.top.src != c.left.src {
            return Err(format!("basic cell {:?}: top.src != left.src", c.id));
        }
        if c.top.tgt != c.right.src {
            return Err(format!("basic cell {:?}: top.tgt != right.src", c.id));
        }
        if c.bottom.src != c.left.tgt {
            return Err(format!("basic cell {:?}: bottom.src != left.tgt", c.id));
        }
        if c.bottom.tgt != c.right.tgt {
            return Err(format!("basic cell {:?}: bottom.tgt != right.tgt", c.id));
        }
        Ok(())
    }

    pub fn cube(c: &Cube) -> Result<(), String> {
        basic_cell(&c.back).map_err(|e| format!("cube {:?} back: {}", c.id, e))?;
        basic_cell(&c.front).map_err(|e| format!("cube {:?} front: {}", c.id, e))?;
        hor_cell(&c.top).map_err(|e| format!("cube {:?} top: {}", c.id, e))?;
        hor_cell(&c.bottom).map_err(|e| format!("cube {:?} bottom: {}", c.id, e))?;
        vert_cell(&c.left).map_err(|e| format!("cube {:?} left: {}", c.id, e))?;
        vert_cell(&c.right).map_err(|e| format!("cube {:?} right: {}", c.id, e))?;
        let id = &c.id;
        // face matching: each 2-face glues the corresponding edges of
        // back and front
        if c.top.top != c.back.top {
            return Err(format!("cube {:?}: top.top != back.top", id));
        }
        if c.top.bottom != c.front.top {
            return Err(format!("cube {:?}: top.bottom != front.top", id));
        }
        if c.bottom.top != c.back.bottom {
            return Err(format!("cube {:?}: bottom.top != back.bottom", id));
        }
        if c.bottom.bottom != c.front.bottom {
            return Err(format!("cube {:?}: bottom.bottom != front.bottom", id));
        }
        if c.left.left != c.back.left {
            return Err(format!("cube {:?}: left.left != back.left", id));
        }
        if c.left.right != c.front.left {
            return Err(format!("cube {:?}: left.right != front.left", id));
        }
        if c.right.left != c.back.right {
            return Err(format!("cube {:?}: right.left != back.right", id));
        }
        if c.right.right != c.front.right {
            return Err(format!("cube {:?}: right.right != front.right", id));
        }
        // the four transversal edges shared between 2-faces coincide
        if c.top.left != c.left.top {
            return Err(format!("cube {:?}: top.left != left.top", id));
        }
        if c.top.right != c.right.top {
            return Err(format!("cube {:?}: top.right != right.top", id));
        }
        if c.bottom.left != c.left.bottom {
            return Err(format!("cube {:?}: bottom.left != left.bottom", id));
        }
        if c.bottom.right != c.right.bottom {
            return Err(format!("cube {:?}: bottom.right != right.bottom", id));
        }
        Ok(())
    }
}

/// An intercategory presented through bounded enumerators and computed
/// operations. Implementations must be pure and immutable after
/// construction; all canonicalization happens inside the backend so that
/// equality of results is structural equality.
///
/// Every `assoc_*`/`unit_*` operation has an `_inv` companion supplying the
/// instance's inverse; invertibility is verified by the law checker, never
/// inferred.
pub trait InterInstance: Send + Sync {
    fn name(&self) -> String;

    fn chirality(&self) -> Chirality {
        Chirality::Right
    }

    // ---- bounded enumerators ----
    fn objects(&self) -> Vec<ObjId>;
    fn trans_arrows(&self) -> Vec<TransArrow>;
    fn hor_arrows(&self) -> Vec<HorArrow>;
    fn vert_arrows(&self) -> Vec<VertArrow>;
    fn hor_cells(&self) -> Vec<HorCell>;
    fn vert_cells(&self) -> Vec<VertCell>;
    fn basic_cells(&self) -> Vec<BasicCell>;
    fn cubes(&self) -> Vec<Cube>;

    // ---- transversal composition (strict) ----
    fn t_comp_trans(&self, f: &TransArrow, g: &TransArrow) -> OpResult<TransArrow>;
    fn t_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell>;
    fn t_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell>;
    fn t_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube>;

    // ---- transversal identities ----
    fn t_id_obj(&self, a: &ObjId) -> OpResult<TransArrow>;
    fn t_id_hor(&self, h: &HorArrow) -> OpResult<HorCell>;
    fn t_id_vert(&self, v: &VertArrow) -> OpResult<VertCell>;
    fn t_id_basic(&self, c: &BasicCell) -> OpResult<Cube>;

    // ---- horizontal composition ----
    fn h_comp_hor(&self, h: &HorArrow, k: &HorArrow) -> OpResult<HorArrow>;
    fn h_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell>;
    fn h_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell>;
    fn h_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube>;

    // ---- vertical composition ----
    fn v_comp_vert(&self, v: &VertArrow, w: &VertArrow) -> OpResult<VertArrow>;
    fn v_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell>;
    fn v_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell>;
    fn v_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube>;

    // ---- weak identities ----
    /// `id_A`: horizontal identity arrow on an object.
    fn hid_obj(&self, a: &ObjId) -> OpResult<HorArrow>;
    /// `Id_A`: vertical identity arrow on an object.
    fn vid_obj(&self, a: &ObjId) -> OpResult<VertArrow>;
    /// `id_f`: horizontal identity cell on a transversal arrow.
    fn hid_trans(&self, f: &TransArrow) -> OpResult<HorCell>;
    /// `Id_f`: vertical identity cell on a transversal arrow.
    fn vid_trans(&self, f: &TransArrow) -> OpResult<VertCell>;
    /// `id_v`: horizontal identity basic cell on a vertical arrow.
    fn hid_vert(&self, v: &VertArrow) -> OpResult<BasicCell>;
    /// `Id_h`: vertical identity basic cell on a horizontal arrow.
    fn vid_hor(&self, h: &HorArrow) -> OpResult<BasicCell>;
    /// `id_psi`: horizontal identity cube on a vertical cell.
    fn hid_vert_cell(&self, psi: &VertCell) -> OpResult<Cube>;
    /// `Id_phi`: vertical identity cube on a horizontal cell.
    fn vid_hor_cell(&self, phi: &HorCell) -> OpResult<Cube>;

    // ---- structural isomorphisms, arrow level ----
    /// `kappa : h | (k | l) -> (h | k) | l` as a special horizontal cell.
    fn assoc_h_arr(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell>;
    fn assoc_h_arr_inv(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell>;
    /// `lambda : id_{src h} | h -> h`.
    fn unit_l_h_arr(&self, h: &HorArrow) -> OpResult<HorCell>;
    fn unit_l_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell>;
    /// `rho : h | id_{tgt h} -> h`.
    fn unit_r_h_arr(&self, h: &HorArrow) -> OpResult<HorCell>;
    fn unit_r_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell>;
    /// `kappa' : v / (w / x) -> (v / w) / x` as a special vertical cell.
    fn assoc_v_arr(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell>;
    fn assoc_v_arr_inv(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell>;
    /// `lambda' : Id_{src v} / v -> v`.
    fn unit_l_v_arr(&self, v: &VertArrow) -> OpResult<VertCell>;
    fn unit_l_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell>;
    /// `rho' : v / Id_{tgt v} -> v`.
    fn unit_r_v_arr(&self, v: &VertArrow) -> OpResult<VertCell>;
    fn unit_r_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell>;

    // ---- structural isomorphisms, cube level ----
    /// `kappa : a | (b | c) -> (a | b) | c` as a special cube.
    fn assoc_h_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube>;
    fn assoc_h_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube>;
    /// `lambda : id_{left a} | a -> a`.
    fn unit_l_h_cell(&self, a: &BasicCell) -> OpResult<Cube>;
    fn unit_l_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube>;
    /// `rho : a | id_{right a} -> a`.
    fn unit_r_h_cell(&self, a: &BasicCell) -> OpResult<Cube>;
    fn unit_r_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube>;
    /// `kappa' : a / (b / c) -> (a / b) / c`.
    fn assoc_v_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube>;
    fn assoc_v_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube>;
    /// `lambda' : Id_{top a} / a -> a`.
    fn unit_l_v_cell(&self, a: &BasicCell) -> OpResult<Cube>;
    fn unit_l_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube>;
    /// `rho' : a / Id_{bottom a} -> a`.
    fn unit_r_v_cell(&self, a: &BasicCell) -> OpResult<Cube>;
    fn unit_r_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube>;

    // ---- interchangers ----
    /// `chi : (a | b) / (c | d) -> (a / c) | (b / d)`, transversally special,
    /// not required invertible. For left instances the direction is reversed.
    fn chi(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell, d: &BasicCell) -> OpResult<Cube>;
    /// `mu : id_v / id_w -> id_{v / w}`.
    fn mu(&self, v: &VertArrow, w: &VertArrow) -> OpResult<Cube>;
    /// `delta : Id_{h | k} -> Id_h | Id_k`.
    fn delta(&self, h: &HorArrow, k: &HorArrow) -> OpResult<Cube>;
    /// `tau : Id_{id_A} -> id_{Id_A}`.
    fn tau(&self, a: &ObjId) -> OpResult<Cube>;
}

/// Shared handle to an instance.
pub type InstanceHandle = Arc<dyn InterInstance>;

/// Compose a chain of cubes transversally, in diagram order.
pub fn t_chain(inst: &dyn InterInstance, cubes: &[Cube]) -> OpResult<Cube> {
    let mut iter = cubes.iter();
    let first = iter
        .next()
        .ok_or_else(|| OpError::internal("t_chain", "empty chain"))?;
    let mut acc = first.clone();
    for c in iter {
        acc = inst.t_comp_cube(&acc, c)?;
    }
    Ok(acc)
}

/// Composability predicates used by checkers when filtering tuples.
pub mod composable {
    use super::*;

    pub fn t_trans(f: &TransArrow, g: &TransArrow) -> bool {
        f.tgt == g.src
    }

    pub fn t_hor_cell(a: &HorCell, b: &HorCell) -> bool {
        a.bottom == b.top
    }

    pub fn t_vert_cell(a: &VertCell, b: &VertCell) -> bool {
        a.right == b.left
    }

    pub fn t_cube(a: &Cube, b: &Cube) -> bool {
        a.front == b.back
    }

    pub fn h_hor(h: &HorArrow, k: &HorArrow) -> bool {
        h.tgt == k.src
    }

    pub fn h_hor_cell(a: &HorCell, b: &HorCell) -> bool {
        a.right == b.left
    }

    pub fn h_basic(a: &BasicCell, b: &BasicCell) -> bool {
        a.right == b.left
    }

    pub fn h_cube(a: &Cube, b: &Cube) -> bool {
        a.right == b.left
    }

    pub fn v_vert(v: &VertArrow, w: &VertArrow) -> bool {
        v.tgt == w.src
    }

    pub fn v_vert_cell(a: &VertCell, b: &VertCell) -> bool {
        a.bottom == b.top
    }

    pub fn v_basic(a: &BasicCell, b: &BasicCell) -> bool {
        a.bottom == b.top
    }

    pub fn v_cube(a: &Cube, b: &Cube) -> bool {
        a.bottom == b.top
    }
}

/// True when a cube's horizontal and vertical faces are all transversal
/// identities; the structural cells and interchangers must be of this form.
pub fn is_transversally_special(inst: &dyn InterInstance, cube: &Cube) -> OpResult<bool> {
    let top_id = inst.t_id_hor(&cube.back.top)?;
    let bottom_id = inst.t_id_hor(&cube.back.bottom)?;
    let left_id = inst.t_id_vert(&cube.back.left)?;
    let right_id = inst.t_id_vert(&cube.back.right)?;
    Ok(cube.top == top_id && cube.bottom == bottom_id && cube.left == left_id && cube.right == right_id)
}
