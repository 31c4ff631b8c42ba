//! The h, v and tr dualities, as pure reinterpretation wrappers around an
//! instance handle.
//!
//! `h` reverses the horizontal direction, `v` the vertical one, and `tr`
//! exchanges the two weak directions while reversing the transversal
//! direction; the transversal reversal is what keeps the interchanger
//! pointed from vertical-of-horizontal composites to horizontal-of-vertical
//! ones, so all duality images of right instances stay right. A pure
//! transversal reversal, by contrast, flips chirality, and is how left
//! instances are reduced to right ones for checking.
//!
//! Identifiers are preserved by every wrapper, so each duality is an
//! involution up to literal presentation equality.

use crate::model::*;
use std::sync::Arc;

// ---- boundary surgery on sort values ----

mod flip {
    use crate::model::*;

    pub fn h_hor(h: &HorArrow) -> HorArrow {
        HorArrow { id: h.id.clone(), src: h.tgt.clone(), tgt: h.src.clone() }
    }

    pub fn h_hor_cell(c: &HorCell) -> HorCell {
        HorCell {
            id: c.id.clone(),
            top: h_hor(&c.top),
            bottom: h_hor(&c.bottom),
            left: c.right.clone(),
            right: c.left.clone(),
        }
    }

    pub fn h_basic(c: &BasicCell) -> BasicCell {
        BasicCell {
            id: c.id.clone(),
            top: h_hor(&c.top),
            bottom: h_hor(&c.bottom),
            left: c.right.clone(),
            right: c.left.clone(),
        }
    }

    pub fn h_cube(c: &Cube) -> Cube {
        Cube {
            id: c.id.clone(),
            back: h_basic(&c.back),
            front: h_basic(&c.front),
            top: h_hor_cell(&c.top),
            bottom: h_hor_cell(&c.bottom),
            left: c.right.clone(),
            right: c.left.clone(),
        }
    }

    pub fn v_vert(v: &VertArrow) -> VertArrow {
        VertArrow { id: v.id.clone(), src: v.tgt.clone(), tgt: v.src.clone() }
    }

    pub fn v_vert_cell(c: &VertCell) -> VertCell {
        VertCell {
            id: c.id.clone(),
            left: v_vert(&c.left),
            right: v_vert(&c.right),
            top: c.bottom.clone(),
            bottom: c.top.clone(),
        }
    }

    pub fn v_basic(c: &BasicCell) -> BasicCell {
        BasicCell {
            id: c.id.clone(),
            top: c.bottom.clone(),
            bottom: c.top.clone(),
            left: v_vert(&c.left),
            right: v_vert(&c.right),
        }
    }

    pub fn v_cube(c: &Cube) -> Cube {
        Cube {
            id: c.id.clone(),
            back: v_basic(&c.back),
            front: v_basic(&c.front),
            top: c.bottom.clone(),
            bottom: c.top.clone(),
            left: v_vert_cell(&c.left),
            right: v_vert_cell(&c.right),
        }
    }

    pub fn rev_trans(f: &TransArrow) -> TransArrow {
        TransArrow { id: f.id.clone(), src: f.tgt.clone(), tgt: f.src.clone() }
    }

    /// Transversal reversal of a horizontal cell: top and bottom change
    /// places and the side arrows reverse.
    pub fn rev_hor_cell(c: &HorCell) -> HorCell {
        HorCell {
            id: c.id.clone(),
            top: c.bottom.clone(),
            bottom: c.top.clone(),
            left: rev_trans(&c.left),
            right: rev_trans(&c.right),
        }
    }

    pub fn rev_vert_cell(c: &VertCell) -> VertCell {
        VertCell {
            id: c.id.clone(),
            left: c.right.clone(),
            right: c.left.clone(),
            top: rev_trans(&c.top),
            bottom: rev_trans(&c.bottom),
        }
    }

    pub fn rev_cube(c: &Cube) -> Cube {
        Cube {
            id: c.id.clone(),
            back: c.front.clone(),
            front: c.back.clone(),
            top: rev_hor_cell(&c.top),
            bottom: rev_hor_cell(&c.bottom),
            left: rev_vert_cell(&c.left),
            right: rev_vert_cell(&c.right),
        }
    }

    // transposition: horizontal and vertical sorts exchange, transversal
    // arrows reverse

    pub fn tr_hor_to_vert(h: &HorArrow) -> VertArrow {
        VertArrow { id: h.id.clone(), src: h.src.clone(), tgt: h.tgt.clone() }
    }

    pub fn tr_vert_to_hor(v: &VertArrow) -> HorArrow {
        HorArrow { id: v.id.clone(), src: v.src.clone(), tgt: v.tgt.clone() }
    }

    /// A vertical cell, read against the reversed transversal direction,
    /// becomes a horizontal cell of the transpose.
    pub fn tr_vert_cell_to_hor(c: &VertCell) -> HorCell {
        HorCell {
            id: c.id.clone(),
            top: tr_vert_to_hor(&c.right),
            bottom: tr_vert_to_hor(&c.left),
            left: rev_trans(&c.top),
            right: rev_trans(&c.bottom),
        }
    }

    pub fn tr_hor_cell_to_vert(c: &HorCell) -> VertCell {
        VertCell {
            id: c.id.clone(),
            left: tr_hor_to_vert(&c.bottom),
            right: tr_hor_to_vert(&c.top),
            top: rev_trans(&c.left),
            bottom: rev_trans(&c.right),
        }
    }

    pub fn tr_basic(c: &BasicCell) -> BasicCell {
        BasicCell {
            id: c.id.clone(),
            top: tr_vert_to_hor(&c.left),
            bottom: tr_vert_to_hor(&c.right),
            left: tr_hor_to_vert(&c.top),
            right: tr_hor_to_vert(&c.bottom),
        }
    }

    pub fn tr_cube(c: &Cube) -> Cube {
        Cube {
            id: c.id.clone(),
            back: tr_basic(&c.front),
            front: tr_basic(&c.back),
            top: tr_vert_cell_to_hor(&c.left),
            bottom: tr_vert_cell_to_hor(&c.right),
            left: tr_hor_cell_to_vert(&c.top),
            right: tr_hor_cell_to_vert(&c.bottom),
        }
    }
}

/// Apply one duality letter.
pub fn dual_h(inst: InstanceHandle) -> InstanceHandle {
    Arc::new(DualH { base: inst })
}

pub fn dual_v(inst: InstanceHandle) -> InstanceHandle {
    Arc::new(DualV { base: inst })
}

pub fn dual_tr(inst: InstanceHandle) -> InstanceHandle {
    Arc::new(DualTr { base: inst })
}

/// Apply a duality word such as `"h"`, `"hv"` or `"tr"`, read left to right.
/// Accepted letters: `h`, `v`, `t` (or the digraph `tr`).
pub fn apply_duality_word(inst: InstanceHandle, word: &str) -> Result<InstanceHandle, String> {
    let mut out = inst;
    let mut chars = word.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            'h' => out = dual_h(out),
            'v' => out = dual_v(out),
            't' => {
                if chars.peek() == Some(&'r') {
                    chars.next();
                }
                out = dual_tr(out);
            }
            other => return Err(format!("unknown duality letter '{}'", other)),
        }
    }
    Ok(out)
}

/// Pure transversal reversal; flips chirality. Used to check left
/// instances with the right-chirality law set.
pub fn reverse_transversal(inst: InstanceHandle) -> InstanceHandle {
    Arc::new(RevT { base: inst })
}

/// Borrowed-form helper for the checker.
pub fn reverse_transversal_arc(inst: &dyn InterInstance) -> Box<dyn InterInstance + '_> {
    Box::new(RevTBorrow { base: inst })
}

// ---- h duality ----

struct DualH {
    base: InstanceHandle,
}

impl InterInstance for DualH {
    fn name(&self) -> String {
        format!("{}~h", self.base.name())
    }

    fn chirality(&self) -> Chirality {
        self.base.chirality()
    }

    fn objects(&self) -> Vec<ObjId> {
        self.base.objects()
    }

    fn trans_arrows(&self) -> Vec<TransArrow> {
        self.base.trans_arrows()
    }

    fn hor_arrows(&self) -> Vec<HorArrow> {
        self.base.hor_arrows().iter().map(flip::h_hor).collect()
    }

    fn vert_arrows(&self) -> Vec<VertArrow> {
        self.base.vert_arrows()
    }

    fn hor_cells(&self) -> Vec<HorCell> {
        self.base.hor_cells().iter().map(flip::h_hor_cell).collect()
    }

    fn vert_cells(&self) -> Vec<VertCell> {
        self.base.vert_cells()
    }

    fn basic_cells(&self) -> Vec<BasicCell> {
        self.base.basic_cells().iter().map(flip::h_basic).collect()
    }

    fn cubes(&self) -> Vec<Cube> {
        self.base.cubes().iter().map(flip::h_cube).collect()
    }

    fn t_comp_trans(&self, f: &TransArrow, g: &TransArrow) -> OpResult<TransArrow> {
        self.base.t_comp_trans(f, g)
    }

    fn t_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell> {
        Ok(flip::h_hor_cell(&self.base.t_comp_hor_cell(&flip::h_hor_cell(a), &flip::h_hor_cell(b))?))
    }

    fn t_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell> {
        self.base.t_comp_vert_cell(a, b)
    }

    fn t_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.t_comp_cube(&flip::h_cube(a), &flip::h_cube(b))?))
    }

    fn t_id_obj(&self, a: &ObjId) -> OpResult<TransArrow> {
        self.base.t_id_obj(a)
    }

    fn t_id_hor(&self, h: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::h_hor_cell(&self.base.t_id_hor(&flip::h_hor(h))?))
    }

    fn t_id_vert(&self, v: &VertArrow) -> OpResult<VertCell> {
        self.base.t_id_vert(v)
    }

    fn t_id_basic(&self, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.t_id_basic(&flip::h_basic(c))?))
    }

    fn h_comp_hor(&self, h: &HorArrow, k: &HorArrow) -> OpResult<HorArrow> {
        Ok(flip::h_hor(&self.base.h_comp_hor(&flip::h_hor(k), &flip::h_hor(h))?))
    }

    fn h_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell> {
        Ok(flip::h_hor_cell(&self.base.h_comp_hor_cell(&flip::h_hor_cell(b), &flip::h_hor_cell(a))?))
    }

    fn h_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
        Ok(flip::h_basic(&self.base.h_comp_basic(&flip::h_basic(b), &flip::h_basic(a))?))
    }

    fn h_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.h_comp_cube(&flip::h_cube(b), &flip::h_cube(a))?))
    }

    fn v_comp_vert(&self, v: &VertArrow, w: &VertArrow) -> OpResult<VertArrow> {
        self.base.v_comp_vert(v, w)
    }

    fn v_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell> {
        self.base.v_comp_vert_cell(a, b)
    }

    fn v_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
        Ok(flip::h_basic(&self.base.v_comp_basic(&flip::h_basic(a), &flip::h_basic(b))?))
    }

    fn v_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.v_comp_cube(&flip::h_cube(a), &flip::h_cube(b))?))
    }

    fn hid_obj(&self, a: &ObjId) -> OpResult<HorArrow> {
        Ok(flip::h_hor(&self.base.hid_obj(a)?))
    }

    fn vid_obj(&self, a: &ObjId) -> OpResult<VertArrow> {
        self.base.vid_obj(a)
    }

    fn hid_trans(&self, f: &TransArrow) -> OpResult<HorCell> {
        Ok(flip::h_hor_cell(&self.base.hid_trans(f)?))
    }

    fn vid_trans(&self, f: &TransArrow) -> OpResult<VertCell> {
        self.base.vid_trans(f)
    }

    fn hid_vert(&self, v: &VertArrow) -> OpResult<BasicCell> {
        Ok(flip::h_basic(&self.base.hid_vert(v)?))
    }

    fn vid_hor(&self, h: &HorArrow) -> OpResult<BasicCell> {
        Ok(flip::h_basic(&self.base.vid_hor(&flip::h_hor(h))?))
    }

    fn hid_vert_cell(&self, psi: &VertCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.hid_vert_cell(psi)?))
    }

    fn vid_hor_cell(&self, phi: &HorCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.vid_hor_cell(&flip::h_hor_cell(phi))?))
    }

    fn assoc_h_arr(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::h_hor_cell(&self.base.assoc_h_arr_inv(&flip::h_hor(l), &flip::h_hor(k), &flip::h_hor(h))?))
    }

    fn assoc_h_arr_inv(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::h_hor_cell(&self.base.assoc_h_arr(&flip::h_hor(l), &flip::h_hor(k), &flip::h_hor(h))?))
    }

    fn unit_l_h_arr(&self, h: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::h_hor_cell(&self.base.unit_r_h_arr(&flip::h_hor(h))?))
    }

    fn unit_l_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::h_hor_cell(&self.base.unit_r_h_arr_inv(&flip::h_hor(h))?))
    }

    fn unit_r_h_arr(&self, h: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::h_hor_cell(&self.base.unit_l_h_arr(&flip::h_hor(h))?))
    }

    fn unit_r_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::h_hor_cell(&self.base.unit_l_h_arr_inv(&flip::h_hor(h))?))
    }

    fn assoc_v_arr(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell> {
        self.base.assoc_v_arr(v, w, x)
    }

    fn assoc_v_arr_inv(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell> {
        self.base.assoc_v_arr_inv(v, w, x)
    }

    fn unit_l_v_arr(&self, v: &VertArrow) -> OpResult<VertCell> {
        self.base.unit_l_v_arr(v)
    }

    fn unit_l_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell> {
        self.base.unit_l_v_arr_inv(v)
    }

    fn unit_r_v_arr(&self, v: &VertArrow) -> OpResult<VertCell> {
        self.base.unit_r_v_arr(v)
    }

    fn unit_r_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell> {
        self.base.unit_r_v_arr_inv(v)
    }

    fn assoc_h_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.assoc_h_cell_inv(&flip::h_basic(c), &flip::h_basic(b), &flip::h_basic(a))?))
    }

    fn assoc_h_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.assoc_h_cell(&flip::h_basic(c), &flip::h_basic(b), &flip::h_basic(a))?))
    }

    fn unit_l_h_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.unit_r_h_cell(&flip::h_basic(a))?))
    }

    fn unit_l_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.unit_r_h_cell_inv(&flip::h_basic(a))?))
    }

    fn unit_r_h_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.unit_l_h_cell(&flip::h_basic(a))?))
    }

    fn unit_r_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.unit_l_h_cell_inv(&flip::h_basic(a))?))
    }

    fn assoc_v_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.assoc_v_cell(&flip::h_basic(a), &flip::h_basic(b), &flip::h_basic(c))?))
    }

    fn assoc_v_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.assoc_v_cell_inv(&flip::h_basic(a), &flip::h_basic(b), &flip::h_basic(c))?))
    }

    fn unit_l_v_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.unit_l_v_cell(&flip::h_basic(a))?))
    }

    fn unit_l_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.unit_l_v_cell_inv(&flip::h_basic(a))?))
    }

    fn unit_r_v_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.unit_r_v_cell(&flip::h_basic(a))?))
    }

    fn unit_r_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.unit_r_v_cell_inv(&flip::h_basic(a))?))
    }

    fn chi(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell, d: &BasicCell) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.chi(
            &flip::h_basic(b),
            &flip::h_basic(a),
            &flip::h_basic(d),
            &flip::h_basic(c),
        )?))
    }

    fn mu(&self, v: &VertArrow, w: &VertArrow) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.mu(v, w)?))
    }

    fn delta(&self, h: &HorArrow, k: &HorArrow) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.delta(&flip::h_hor(k), &flip::h_hor(h))?))
    }

    fn tau(&self, a: &ObjId) -> OpResult<Cube> {
        Ok(flip::h_cube(&self.base.tau(a)?))
    }
}

// ---- v duality ----

struct DualV {
    base: InstanceHandle,
}

impl InterInstance for DualV {
    fn name(&self) -> String {
        format!("{}~v", self.base.name())
    }

    fn chirality(&self) -> Chirality {
        self.base.chirality()
    }

    fn objects(&self) -> Vec<ObjId> {
        self.base.objects()
    }

    fn trans_arrows(&self) -> Vec<TransArrow> {
        self.base.trans_arrows()
    }

    fn hor_arrows(&self) -> Vec<HorArrow> {
        self.base.hor_arrows()
    }

    fn vert_arrows(&self) -> Vec<VertArrow> {
        self.base.vert_arrows().iter().map(flip::v_vert).collect()
    }

    fn hor_cells(&self) -> Vec<HorCell> {
        self.base.hor_cells()
    }

    fn vert_cells(&self) -> Vec<VertCell> {
        self.base.vert_cells().iter().map(flip::v_vert_cell).collect()
    }

    fn basic_cells(&self) -> Vec<BasicCell> {
        self.base.basic_cells().iter().map(flip::v_basic).collect()
    }

    fn cubes(&self) -> Vec<Cube> {
        self.base.cubes().iter().map(flip::v_cube).collect()
    }

    fn t_comp_trans(&self, f: &TransArrow, g: &TransArrow) -> OpResult<TransArrow> {
        self.base.t_comp_trans(f, g)
    }

    fn t_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell> {
        self.base.t_comp_hor_cell(a, b)
    }

    fn t_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell> {
        Ok(flip::v_vert_cell(&self.base.t_comp_vert_cell(&flip::v_vert_cell(a), &flip::v_vert_cell(b))?))
    }

    fn t_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.t_comp_cube(&flip::v_cube(a), &flip::v_cube(b))?))
    }

    fn t_id_obj(&self, a: &ObjId) -> OpResult<TransArrow> {
        self.base.t_id_obj(a)
    }

    fn t_id_hor(&self, h: &HorArrow) -> OpResult<HorCell> {
        self.base.t_id_hor(h)
    }

    fn t_id_vert(&self, v: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::v_vert_cell(&self.base.t_id_vert(&flip::v_vert(v))?))
    }

    fn t_id_basic(&self, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.t_id_basic(&flip::v_basic(c))?))
    }

    fn h_comp_hor(&self, h: &HorArrow, k: &HorArrow) -> OpResult<HorArrow> {
        self.base.h_comp_hor(h, k)
    }

    fn h_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell> {
        self.base.h_comp_hor_cell(a, b)
    }

    fn h_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
        Ok(flip::v_basic(&self.base.h_comp_basic(&flip::v_basic(a), &flip::v_basic(b))?))
    }

    fn h_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.h_comp_cube(&flip::v_cube(a), &flip::v_cube(b))?))
    }

    fn v_comp_vert(&self, v: &VertArrow, w: &VertArrow) -> OpResult<VertArrow> {
        Ok(flip::v_vert(&self.base.v_comp_vert(&flip::v_vert(w), &flip::v_vert(v))?))
    }

    fn v_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell> {
        Ok(flip::v_vert_cell(&self.base.v_comp_vert_cell(&flip::v_vert_cell(b), &flip::v_vert_cell(a))?))
    }

    fn v_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
        Ok(flip::v_basic(&self.base.v_comp_basic(&flip::v_basic(b), &flip::v_basic(a))?))
    }

    fn v_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.v_comp_cube(&flip::v_cube(b), &flip::v_cube(a))?))
    }

    fn hid_obj(&self, a: &ObjId) -> OpResult<HorArrow> {
        self.base.hid_obj(a)
    }

    fn vid_obj(&self, a: &ObjId) -> OpResult<VertArrow> {
        Ok(flip::v_vert(&self.base.vid_obj(a)?))
    }

    fn hid_trans(&self, f: &TransArrow) -> OpResult<HorCell> {
        self.base.hid_trans(f)
    }

    fn vid_trans(&self, f: &TransArrow) -> OpResult<VertCell> {
        Ok(flip::v_vert_cell(&self.base.vid_trans(f)?))
    }

    fn hid_vert(&self, v: &VertArrow) -> OpResult<BasicCell> {
        Ok(flip::v_basic(&self.base.hid_vert(&flip::v_vert(v))?))
    }

    fn vid_hor(&self, h: &HorArrow) -> OpResult<BasicCell> {
        Ok(flip::v_basic(&self.base.vid_hor(h)?))
    }

    fn hid_vert_cell(&self, psi: &VertCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.hid_vert_cell(&flip::v_vert_cell(psi))?))
    }

    fn vid_hor_cell(&self, phi: &HorCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.vid_hor_cell(phi)?))
    }

    fn assoc_h_arr(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell> {
        self.base.assoc_h_arr(h, k, l)
    }

    fn assoc_h_arr_inv(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell> {
        self.base.assoc_h_arr_inv(h, k, l)
    }

    fn unit_l_h_arr(&self, h: &HorArrow) -> OpResult<HorCell> {
        self.base.unit_l_h_arr(h)
    }

    fn unit_l_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell> {
        self.base.unit_l_h_arr_inv(h)
    }

    fn unit_r_h_arr(&self, h: &HorArrow) -> OpResult<HorCell> {
        self.base.unit_r_h_arr(h)
    }

    fn unit_r_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell> {
        self.base.unit_r_h_arr_inv(h)
    }

    fn assoc_v_arr(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::v_vert_cell(&self.base.assoc_v_arr_inv(&flip::v_vert(x), &flip::v_vert(w), &flip::v_vert(v))?))
    }

    fn assoc_v_arr_inv(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::v_vert_cell(&self.base.assoc_v_arr(&flip::v_vert(x), &flip::v_vert(w), &flip::v_vert(v))?))
    }

    fn unit_l_v_arr(&self, v: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::v_vert_cell(&self.base.unit_r_v_arr(&flip::v_vert(v))?))
    }

    fn unit_l_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::v_vert_cell(&self.base.unit_r_v_arr_inv(&flip::v_vert(v))?))
    }

    fn unit_r_v_arr(&self, v: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::v_vert_cell(&self.base.unit_l_v_arr(&flip::v_vert(v))?))
    }

    fn unit_r_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::v_vert_cell(&self.base.unit_l_v_arr_inv(&flip::v_vert(v))?))
    }

    fn assoc_h_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.assoc_h_cell(&flip::v_basic(a), &flip::v_basic(b), &flip::v_basic(c))?))
    }

    fn assoc_h_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.assoc_h_cell_inv(&flip::v_basic(a), &flip::v_basic(b), &flip::v_basic(c))?))
    }

    fn unit_l_h_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.unit_l_h_cell(&flip::v_basic(a))?))
    }

    fn unit_l_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.unit_l_h_cell_inv(&flip::v_basic(a))?))
    }

    fn unit_r_h_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.unit_r_h_cell(&flip::v_basic(a))?))
    }

    fn unit_r_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.unit_r_h_cell_inv(&flip::v_basic(a))?))
    }

    fn assoc_v_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.assoc_v_cell_inv(&flip::v_basic(c), &flip::v_basic(b), &flip::v_basic(a))?))
    }

    fn assoc_v_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.assoc_v_cell(&flip::v_basic(c), &flip::v_basic(b), &flip::v_basic(a))?))
    }

    fn unit_l_v_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.unit_r_v_cell(&flip::v_basic(a))?))
    }

    fn unit_l_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.unit_r_v_cell_inv(&flip::v_basic(a))?))
    }

    fn unit_r_v_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.unit_l_v_cell(&flip::v_basic(a))?))
    }

    fn unit_r_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.unit_l_v_cell_inv(&flip::v_basic(a))?))
    }

    fn chi(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell, d: &BasicCell) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.chi(
            &flip::v_basic(c),
            &flip::v_basic(d),
            &flip::v_basic(a),
            &flip::v_basic(b),
        )?))
    }

    fn mu(&self, v: &VertArrow, w: &VertArrow) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.mu(&flip::v_vert(w), &flip::v_vert(v))?))
    }

    fn delta(&self, h: &HorArrow, k: &HorArrow) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.delta(h, k)?))
    }

    fn tau(&self, a: &ObjId) -> OpResult<Cube> {
        Ok(flip::v_cube(&self.base.tau(a)?))
    }
}

// ---- tr duality ----

struct DualTr {
    base: InstanceHandle,
}

impl InterInstance for DualTr {
    fn name(&self) -> String {
        format!("{}~tr", self.base.name())
    }

    fn chirality(&self) -> Chirality {
        // switching directions and reversing the transversal preserves the
        // direction of the interchanger
        self.base.chirality()
    }

    fn objects(&self) -> Vec<ObjId> {
        self.base.objects()
    }

    fn trans_arrows(&self) -> Vec<TransArrow> {
        self.base.trans_arrows().iter().map(flip::rev_trans).collect()
    }

    fn hor_arrows(&self) -> Vec<HorArrow> {
        self.base.vert_arrows().iter().map(flip::tr_vert_to_hor).collect()
    }

    fn vert_arrows(&self) -> Vec<VertArrow> {
        self.base.hor_arrows().iter().map(flip::tr_hor_to_vert).collect()
    }

    fn hor_cells(&self) -> Vec<HorCell> {
        self.base.vert_cells().iter().map(flip::tr_vert_cell_to_hor).collect()
    }

    fn vert_cells(&self) -> Vec<VertCell> {
        self.base.hor_cells().iter().map(flip::tr_hor_cell_to_vert).collect()
    }

    fn basic_cells(&self) -> Vec<BasicCell> {
        self.base.basic_cells().iter().map(flip::tr_basic).collect()
    }

    fn cubes(&self) -> Vec<Cube> {
        self.base.cubes().iter().map(flip::tr_cube).collect()
    }

    fn t_comp_trans(&self, f: &TransArrow, g: &TransArrow) -> OpResult<TransArrow> {
        Ok(flip::rev_trans(&self.base.t_comp_trans(&flip::rev_trans(g), &flip::rev_trans(f))?))
    }

    fn t_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell> {
        Ok(flip::tr_vert_cell_to_hor(&self.base.t_comp_vert_cell(
            &flip::tr_hor_cell_to_vert(b),
            &flip::tr_hor_cell_to_vert(a),
        )?))
    }

    fn t_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell> {
        Ok(flip::tr_hor_cell_to_vert(&self.base.t_comp_hor_cell(
            &flip::tr_vert_cell_to_hor(b),
            &flip::tr_vert_cell_to_hor(a),
        )?))
    }

    fn t_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.t_comp_cube(&flip::tr_cube(b), &flip::tr_cube(a))?))
    }

    fn t_id_obj(&self, a: &ObjId) -> OpResult<TransArrow> {
        Ok(flip::rev_trans(&self.base.t_id_obj(a)?))
    }

    fn t_id_hor(&self, h: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::tr_vert_cell_to_hor(&self.base.t_id_vert(&flip::tr_hor_to_vert(h))?))
    }

    fn t_id_vert(&self, v: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::tr_hor_cell_to_vert(&self.base.t_id_hor(&flip::tr_vert_to_hor(v))?))
    }

    fn t_id_basic(&self, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.t_id_basic(&flip::tr_basic(c))?))
    }

    fn h_comp_hor(&self, h: &HorArrow, k: &HorArrow) -> OpResult<HorArrow> {
        Ok(flip::tr_vert_to_hor(&self.base.v_comp_vert(&flip::tr_hor_to_vert(h), &flip::tr_hor_to_vert(k))?))
    }

    fn h_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell> {
        Ok(flip::tr_vert_cell_to_hor(&self.base.v_comp_vert_cell(
            &flip::tr_hor_cell_to_vert(a),
            &flip::tr_hor_cell_to_vert(b),
        )?))
    }

    fn h_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
        Ok(flip::tr_basic(&self.base.v_comp_basic(&flip::tr_basic(a), &flip::tr_basic(b))?))
    }

    fn h_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.v_comp_cube(&flip::tr_cube(a), &flip::tr_cube(b))?))
    }

    fn v_comp_vert(&self, v: &VertArrow, w: &VertArrow) -> OpResult<VertArrow> {
        Ok(flip::tr_hor_to_vert(&self.base.h_comp_hor(&flip::tr_vert_to_hor(v), &flip::tr_vert_to_hor(w))?))
    }

    fn v_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell> {
        Ok(flip::tr_hor_cell_to_vert(&self.base.h_comp_hor_cell(
            &flip::tr_vert_cell_to_hor(a),
            &flip::tr_vert_cell_to_hor(b),
        )?))
    }

    fn v_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
        Ok(flip::tr_basic(&self.base.h_comp_basic(&flip::tr_basic(a), &flip::tr_basic(b))?))
    }

    fn v_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.h_comp_cube(&flip::tr_cube(a), &flip::tr_cube(b))?))
    }

    fn hid_obj(&self, a: &ObjId) -> OpResult<HorArrow> {
        Ok(flip::tr_vert_to_hor(&self.base.vid_obj(a)?))
    }

    fn vid_obj(&self, a: &ObjId) -> OpResult<VertArrow> {
        Ok(flip::tr_hor_to_vert(&self.base.hid_obj(a)?))
    }

    fn hid_trans(&self, f: &TransArrow) -> OpResult<HorCell> {
        Ok(flip::tr_vert_cell_to_hor(&self.base.vid_trans(&flip::rev_trans(f))?))
    }

    fn vid_trans(&self, f: &TransArrow) -> OpResult<VertCell> {
        Ok(flip::tr_hor_cell_to_vert(&self.base.hid_trans(&flip::rev_trans(f))?))
    }

    fn hid_vert(&self, v: &VertArrow) -> OpResult<BasicCell> {
        Ok(flip::tr_basic(&self.base.vid_hor(&flip::tr_vert_to_hor(v))?))
    }

    fn vid_hor(&self, h: &HorArrow) -> OpResult<BasicCell> {
        Ok(flip::tr_basic(&self.base.hid_vert(&flip::tr_hor_to_vert(h))?))
    }

    fn hid_vert_cell(&self, psi: &VertCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.vid_hor_cell(&flip::tr_vert_cell_to_hor(psi))?))
    }

    fn vid_hor_cell(&self, phi: &HorCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.hid_vert_cell(&flip::tr_hor_cell_to_vert(phi))?))
    }

    fn assoc_h_arr(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::tr_vert_cell_to_hor(&self.base.assoc_v_arr_inv(
            &flip::tr_hor_to_vert(h),
            &flip::tr_hor_to_vert(k),
            &flip::tr_hor_to_vert(l),
        )?))
    }

    fn assoc_h_arr_inv(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::tr_vert_cell_to_hor(&self.base.assoc_v_arr(
            &flip::tr_hor_to_vert(h),
            &flip::tr_hor_to_vert(k),
            &flip::tr_hor_to_vert(l),
        )?))
    }

    fn unit_l_h_arr(&self, h: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::tr_vert_cell_to_hor(&self.base.unit_l_v_arr_inv(&flip::tr_hor_to_vert(h))?))
    }

    fn unit_l_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::tr_vert_cell_to_hor(&self.base.unit_l_v_arr(&flip::tr_hor_to_vert(h))?))
    }

    fn unit_r_h_arr(&self, h: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::tr_vert_cell_to_hor(&self.base.unit_r_v_arr_inv(&flip::tr_hor_to_vert(h))?))
    }

    fn unit_r_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell> {
        Ok(flip::tr_vert_cell_to_hor(&self.base.unit_r_v_arr(&flip::tr_hor_to_vert(h))?))
    }

    fn assoc_v_arr(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::tr_hor_cell_to_vert(&self.base.assoc_h_arr_inv(
            &flip::tr_vert_to_hor(v),
            &flip::tr_vert_to_hor(w),
            &flip::tr_vert_to_hor(x),
        )?))
    }

    fn assoc_v_arr_inv(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::tr_hor_cell_to_vert(&self.base.assoc_h_arr(
            &flip::tr_vert_to_hor(v),
            &flip::tr_vert_to_hor(w),
            &flip::tr_vert_to_hor(x),
        )?))
    }

    fn unit_l_v_arr(&self, v: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::tr_hor_cell_to_vert(&self.base.unit_l_h_arr_inv(&flip::tr_vert_to_hor(v))?))
    }

    fn unit_l_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::tr_hor_cell_to_vert(&self.base.unit_l_h_arr(&flip::tr_vert_to_hor(v))?))
    }

    fn unit_r_v_arr(&self, v: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::tr_hor_cell_to_vert(&self.base.unit_r_h_arr_inv(&flip::tr_vert_to_hor(v))?))
    }

    fn unit_r_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell> {
        Ok(flip::tr_hor_cell_to_vert(&self.base.unit_r_h_arr(&flip::tr_vert_to_hor(v))?))
    }

    fn assoc_h_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.assoc_v_cell_inv(
            &flip::tr_basic(a),
            &flip::tr_basic(b),
            &flip::tr_basic(c),
        )?))
    }

    fn assoc_h_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.assoc_v_cell(
            &flip::tr_basic(a),
            &flip::tr_basic(b),
            &flip::tr_basic(c),
        )?))
    }

    fn unit_l_h_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.unit_l_v_cell_inv(&flip::tr_basic(a))?))
    }

    fn unit_l_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.unit_l_v_cell(&flip::tr_basic(a))?))
    }

    fn unit_r_h_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.unit_r_v_cell_inv(&flip::tr_basic(a))?))
    }

    fn unit_r_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.unit_r_v_cell(&flip::tr_basic(a))?))
    }

    fn assoc_v_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.assoc_h_cell_inv(
            &flip::tr_basic(a),
            &flip::tr_basic(b),
            &flip::tr_basic(c),
        )?))
    }

    fn assoc_v_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.assoc_h_cell(
            &flip::tr_basic(a),
            &flip::tr_basic(b),
            &flip::tr_basic(c),
        )?))
    }

    fn unit_l_v_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.unit_l_h_cell_inv(&flip::tr_basic(a))?))
    }

    fn unit_l_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.unit_l_h_cell(&flip::tr_basic(a))?))
    }

    fn unit_r_v_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.unit_r_h_cell_inv(&flip::tr_basic(a))?))
    }

    fn unit_r_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.unit_r_h_cell(&flip::tr_basic(a))?))
    }

    fn chi(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell, d: &BasicCell) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.chi(
            &flip::tr_basic(a),
            &flip::tr_basic(c),
            &flip::tr_basic(b),
            &flip::tr_basic(d),
        )?))
    }

    fn mu(&self, v: &VertArrow, w: &VertArrow) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.delta(&flip::tr_vert_to_hor(v), &flip::tr_vert_to_hor(w))?))
    }

    fn delta(&self, h: &HorArrow, k: &HorArrow) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.mu(&flip::tr_hor_to_vert(h), &flip::tr_hor_to_vert(k))?))
    }

    fn tau(&self, a: &ObjId) -> OpResult<Cube> {
        Ok(flip::tr_cube(&self.base.tau(a)?))
    }
}

// ---- transversal reversal ----

macro_rules! revt_impl {
    ($basefield:tt) => {
        fn name(&self) -> String {
            format!("{}~rev", self.$basefield.name())
        }

        fn chirality(&self) -> Chirality {
            match self.$basefield.chirality() {
                Chirality::Right => Chirality::Left,
                Chirality::Left => Chirality::Right,
            }
        }

        fn objects(&self) -> Vec<ObjId> {
            self.$basefield.objects()
        }

        fn trans_arrows(&self) -> Vec<TransArrow> {
            self.$basefield.trans_arrows().iter().map(flip::rev_trans).collect()
        }

        fn hor_arrows(&self) -> Vec<HorArrow> {
            self.$basefield.hor_arrows()
        }

        fn vert_arrows(&self) -> Vec<VertArrow> {
            self.$basefield.vert_arrows()
        }

        fn hor_cells(&self) -> Vec<HorCell> {
            self.$basefield.hor_cells().iter().map(flip::rev_hor_cell).collect()
        }

        fn vert_cells(&self) -> Vec<VertCell> {
            self.$basefield.vert_cells().iter().map(flip::rev_vert_cell).collect()
        }

        fn basic_cells(&self) -> Vec<BasicCell> {
            self.$basefield.basic_cells()
        }

        fn cubes(&self) -> Vec<Cube> {
            self.$basefield.cubes().iter().map(flip::rev_cube).collect()
        }

        fn t_comp_trans(&self, f: &TransArrow, g: &TransArrow) -> OpResult<TransArrow> {
            Ok(flip::rev_trans(&self.$basefield.t_comp_trans(&flip::rev_trans(g), &flip::rev_trans(f))?))
        }

        fn t_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell> {
            Ok(flip::rev_hor_cell(&self.$basefield.t_comp_hor_cell(&flip::rev_hor_cell(b), &flip::rev_hor_cell(a))?))
        }

        fn t_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell> {
            Ok(flip::rev_vert_cell(&self.$basefield.t_comp_vert_cell(&flip::rev_vert_cell(b), &flip::rev_vert_cell(a))?))
        }

        fn t_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.t_comp_cube(&flip::rev_cube(b), &flip::rev_cube(a))?))
        }

        fn t_id_obj(&self, a: &ObjId) -> OpResult<TransArrow> {
            Ok(flip::rev_trans(&self.$basefield.t_id_obj(a)?))
        }

        fn t_id_hor(&self, h: &HorArrow) -> OpResult<HorCell> {
            Ok(flip::rev_hor_cell(&self.$basefield.t_id_hor(h)?))
        }

        fn t_id_vert(&self, v: &VertArrow) -> OpResult<VertCell> {
            Ok(flip::rev_vert_cell(&self.$basefield.t_id_vert(v)?))
        }

        fn t_id_basic(&self, c: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.t_id_basic(c)?))
        }

        fn h_comp_hor(&self, h: &HorArrow, k: &HorArrow) -> OpResult<HorArrow> {
            self.$basefield.h_comp_hor(h, k)
        }

        fn h_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell> {
            Ok(flip::rev_hor_cell(&self.$basefield.h_comp_hor_cell(&flip::rev_hor_cell(a), &flip::rev_hor_cell(b))?))
        }

        fn h_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
            self.$basefield.h_comp_basic(a, b)
        }

        fn h_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.h_comp_cube(&flip::rev_cube(a), &flip::rev_cube(b))?))
        }

        fn v_comp_vert(&self, v: &VertArrow, w: &VertArrow) -> OpResult<VertArrow> {
            self.$basefield.v_comp_vert(v, w)
        }

        fn v_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell> {
            Ok(flip::rev_vert_cell(&self.$basefield.v_comp_vert_cell(&flip::rev_vert_cell(a), &flip::rev_vert_cell(b))?))
        }

        fn v_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
            self.$basefield.v_comp_basic(a, b)
        }

        fn v_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.v_comp_cube(&flip::rev_cube(a), &flip::rev_cube(b))?))
        }

        fn hid_obj(&self, a: &ObjId) -> OpResult<HorArrow> {
            self.$basefield.hid_obj(a)
        }

        fn vid_obj(&self, a: &ObjId) -> OpResult<VertArrow> {
            self.$basefield.vid_obj(a)
        }

        fn hid_trans(&self, f: &TransArrow) -> OpResult<HorCell> {
            Ok(flip::rev_hor_cell(&self.$basefield.hid_trans(&flip::rev_trans(f))?))
        }

        fn vid_trans(&self, f: &TransArrow) -> OpResult<VertCell> {
            Ok(flip::rev_vert_cell(&self.$basefield.vid_trans(&flip::rev_trans(f))?))
        }

        fn hid_vert(&self, v: &VertArrow) -> OpResult<BasicCell> {
            self.$basefield.hid_vert(v)
        }

        fn vid_hor(&self, h: &HorArrow) -> OpResult<BasicCell> {
            self.$basefield.vid_hor(h)
        }

        fn hid_vert_cell(&self, psi: &VertCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.hid_vert_cell(&flip::rev_vert_cell(psi))?))
        }

        fn vid_hor_cell(&self, phi: &HorCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.vid_hor_cell(&flip::rev_hor_cell(phi))?))
        }

        fn assoc_h_arr(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell> {
            Ok(flip::rev_hor_cell(&self.$basefield.assoc_h_arr_inv(h, k, l)?))
        }

        fn assoc_h_arr_inv(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell> {
            Ok(flip::rev_hor_cell(&self.$basefield.assoc_h_arr(h, k, l)?))
        }

        fn unit_l_h_arr(&self, h: &HorArrow) -> OpResult<HorCell> {
            Ok(flip::rev_hor_cell(&self.$basefield.unit_l_h_arr_inv(h)?))
        }

        fn unit_l_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell> {
            Ok(flip::rev_hor_cell(&self.$basefield.unit_l_h_arr(h)?))
        }

        fn unit_r_h_arr(&self, h: &HorArrow) -> OpResult<HorCell> {
            Ok(flip::rev_hor_cell(&self.$basefield.unit_r_h_arr_inv(h)?))
        }

        fn unit_r_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell> {
            Ok(flip::rev_hor_cell(&self.$basefield.unit_r_h_arr(h)?))
        }

        fn assoc_v_arr(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell> {
            Ok(flip::rev_vert_cell(&self.$basefield.assoc_v_arr_inv(v, w, x)?))
        }

        fn assoc_v_arr_inv(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell> {
            Ok(flip::rev_vert_cell(&self.$basefield.assoc_v_arr(v, w, x)?))
        }

        fn unit_l_v_arr(&self, v: &VertArrow) -> OpResult<VertCell> {
            Ok(flip::rev_vert_cell(&self.$basefield.unit_l_v_arr_inv(v)?))
        }

        fn unit_l_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell> {
            Ok(flip::rev_vert_cell(&self.$basefield.unit_l_v_arr(v)?))
        }

        fn unit_r_v_arr(&self, v: &VertArrow) -> OpResult<VertCell> {
            Ok(flip::rev_vert_cell(&self.$basefield.unit_r_v_arr_inv(v)?))
        }

        fn unit_r_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell> {
            Ok(flip::rev_vert_cell(&self.$basefield.unit_r_v_arr(v)?))
        }

        fn assoc_h_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.assoc_h_cell_inv(a, b, c)?))
        }

        fn assoc_h_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.assoc_h_cell(a, b, c)?))
        }

        fn unit_l_h_cell(&self, a: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.unit_l_h_cell_inv(a)?))
        }

        fn unit_l_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.unit_l_h_cell(a)?))
        }

        fn unit_r_h_cell(&self, a: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.unit_r_h_cell_inv(a)?))
        }

        fn unit_r_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.unit_r_h_cell(a)?))
        }

        fn assoc_v_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.assoc_v_cell_inv(a, b, c)?))
        }

        fn assoc_v_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.assoc_v_cell(a, b, c)?))
        }

        fn unit_l_v_cell(&self, a: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.unit_l_v_cell_inv(a)?))
        }

        fn unit_l_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.unit_l_v_cell(a)?))
        }

        fn unit_r_v_cell(&self, a: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.unit_r_v_cell_inv(a)?))
        }

        fn unit_r_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.unit_r_v_cell(a)?))
        }

        fn chi(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell, d: &BasicCell) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.chi(a, b, c, d)?))
        }

        fn mu(&self, v: &VertArrow, w: &VertArrow) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.mu(v, w)?))
        }

        fn delta(&self, h: &HorArrow, k: &HorArrow) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.delta(h, k)?))
        }

        fn tau(&self, a: &ObjId) -> OpResult<Cube> {
            Ok(flip::rev_cube(&self.$basefield.tau(a)?))
        }
    };
}

struct RevT {
    base: InstanceHandle,
}

impl InterInstance for RevT {
    revt_impl!(base);
}

struct RevTBorrow<'a> {
    base: &'a dyn InterInstance,
}

impl<'a> InterInstance for RevTBorrow<'a> {
    revt_impl!(base);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::duoidal::DuoidalInstance;

    #[test]
    fn duality_words_parse() {
        let base: InstanceHandle = Arc::new(DuoidalInstance::new(1));
        assert!(apply_duality_word(base.clone(), "hvtr").is_ok());
        assert!(apply_duality_word(base, "x").is_err());
    }

    #[test]
    fn tr_dual_of_duoidal_swaps_tensors() {
        let base: InstanceHandle = Arc::new(DuoidalInstance::new(3));
        let tr = dual_tr(base.clone());
        // horizontal composition of the transpose is the coproduct
        let cells = tr.basic_cells();
        let two = cells.iter().find(|c| c.id == Val::Nat(2)).unwrap();
        let three = cells.iter().find(|c| c.id == Val::Nat(3)).unwrap();
        let h = tr.h_comp_basic(two, three).unwrap();
        assert_eq!(h.id, Val::Nat(5));
        let v = tr.v_comp_basic(two, three).unwrap();
        assert_eq!(v.id, Val::Nat(6));
        // the interchanger of the transpose still maps 2 -> 4 on singletons
        let one = cells.iter().find(|c| c.id == Val::Nat(1)).unwrap();
        let chi = tr.chi(one, one, one, one).unwrap();
        let f = chi.id.as_finfun().unwrap();
        assert_eq!((f.dom.size, f.cod.size), (2, 4));
    }
}

#[cfg(test)]
mod law_tests {
    use super::*;
    use crate::instances::duoidal::DuoidalInstance;
    use crate::laws::{check_all, CheckConfig};

    #[test]
    fn duality_images_pass_laws() {
        let base: InstanceHandle = Arc::new(DuoidalInstance::new(2));
        let config = CheckConfig::with_budget(400, 11);
        for word in ["h", "v", "tr", "hv", "htr"] {
            let image = apply_duality_word(base.clone(), word).unwrap();
            let report = check_all(image.as_ref(), &config);
            for r in &report.reports {
                assert!(r.passed(), "{}: law {} failed: {:?}", word, r.law, r.failures.first());
            }
        }
    }
}
