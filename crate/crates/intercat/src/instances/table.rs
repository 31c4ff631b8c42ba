//! Table-backed instances loaded from [`InstanceDescription`]s.
//!
//! All sorts and operations are explicit finite tables; anything not listed
//! is simply undefined and reported as a missing entry, which the law
//! checker treats as truncation and skips. Loading is eager: ids must
//! resolve, declared cells must satisfy the boundary rules, and table
//! entries must be boundary-coherent, with errors carrying a path into the
//! description.

use crate::describe::*;
use crate::model::*;
use std::collections::HashMap;

pub struct TableInstance {
    name: String,
    chirality: Chirality,
    objects: Vec<ObjId>,
    trans: Vec<TransArrow>,
    hors: Vec<HorArrow>,
    verts: Vec<VertArrow>,
    hor_cells: Vec<HorCell>,
    vert_cells: Vec<VertCell>,
    basics: Vec<BasicCell>,
    cubes: Vec<Cube>,
    // operation tables keyed by element ids
    t_comp_trans: HashMap<(Val, Val), TransArrow>,
    t_comp_hor_cell: HashMap<(Val, Val), HorCell>,
    t_comp_vert_cell: HashMap<(Val, Val), VertCell>,
    t_comp_cube: HashMap<(Val, Val), Cube>,
    t_id_obj: HashMap<Val, TransArrow>,
    t_id_hor: HashMap<Val, HorCell>,
    t_id_vert: HashMap<Val, VertCell>,
    t_id_basic: HashMap<Val, Cube>,
    h_comp_hor: HashMap<(Val, Val), HorArrow>,
    h_comp_hor_cell: HashMap<(Val, Val), HorCell>,
    h_comp_basic: HashMap<(Val, Val), BasicCell>,
    h_comp_cube: HashMap<(Val, Val), Cube>,
    v_comp_vert: HashMap<(Val, Val), VertArrow>,
    v_comp_vert_cell: HashMap<(Val, Val), VertCell>,
    v_comp_basic: HashMap<(Val, Val), BasicCell>,
    v_comp_cube: HashMap<(Val, Val), Cube>,
    hid_obj: HashMap<Val, HorArrow>,
    vid_obj: HashMap<Val, VertArrow>,
    hid_trans: HashMap<Val, HorCell>,
    vid_trans: HashMap<Val, VertCell>,
    hid_vert: HashMap<Val, BasicCell>,
    vid_hor: HashMap<Val, BasicCell>,
    hid_vert_cell: HashMap<Val, Cube>,
    vid_hor_cell: HashMap<Val, Cube>,
    assoc_h_arr: HashMap<(Val, Val, Val), (HorCell, HorCell)>,
    unit_l_h_arr: HashMap<Val, (HorCell, HorCell)>,
    unit_r_h_arr: HashMap<Val, (HorCell, HorCell)>,
    assoc_v_arr: HashMap<(Val, Val, Val), (VertCell, VertCell)>,
    unit_l_v_arr: HashMap<Val, (VertCell, VertCell)>,
    unit_r_v_arr: HashMap<Val, (VertCell, VertCell)>,
    assoc_h_cell: HashMap<(Val, Val, Val), (Cube, Cube)>,
    unit_l_h_cell: HashMap<Val, (Cube, Cube)>,
    unit_r_h_cell: HashMap<Val, (Cube, Cube)>,
    assoc_v_cell: HashMap<(Val, Val, Val), (Cube, Cube)>,
    unit_l_v_cell: HashMap<Val, (Cube, Cube)>,
    unit_r_v_cell: HashMap<Val, (Cube, Cube)>,
    chi: HashMap<(Val, Val, Val, Val), Cube>,
    mu: HashMap<(Val, Val), Cube>,
    delta: HashMap<(Val, Val), Cube>,
    tau: HashMap<Val, Cube>,
}

fn key(id: &str) -> Val {
    Val::str(id)
}

macro_rules! lookup2 {
    ($table:expr, $op:literal, $a:expr, $b:expr) => {
        $table
            .get(&($a.id.clone(), $b.id.clone()))
            .cloned()
            .ok_or_else(|| OpError::missing($op, ($a, $b)))
    };
}

macro_rules! lookup1 {
    ($table:expr, $op:literal, $a:expr) => {
        $table.get(&$a.id).cloned().ok_or_else(|| OpError::missing($op, $a))
    };
}

impl TableInstance {
    pub fn load(desc: &InstanceDescription) -> Result<TableInstance, String> {
        if !desc.schema.is_empty() && desc.schema != SCHEMA {
            return Err(format!("schema: expected {}, found {}", SCHEMA, desc.schema));
        }
        let chirality = match desc.chirality.as_deref() {
            None | Some("right") => Chirality::Right,
            Some("left") => Chirality::Left,
            Some(other) => return Err(format!("chirality: unknown value '{}'", other)),
        };
        let mut objects: HashMap<String, ObjId> = HashMap::new();
        for (ix, o) in desc.objects.iter().enumerate() {
            if objects.insert(o.clone(), ObjId(key(o))).is_some() {
                return Err(format!("objects[{}]: duplicate id '{}'", ix, o));
            }
        }
        let obj = |path: String, id: &str| -> Result<ObjId, String> {
            objects.get(id).cloned().ok_or(format!("{}: unknown object '{}'", path, id))
        };

        let mut trans: HashMap<String, TransArrow> = HashMap::new();
        for (ix, a) in desc.trans_arrows.iter().enumerate() {
            let path = format!("trans_arrows[{}]", ix);
            let arrow = TransArrow::new(
                key(&a.id),
                obj(format!("{}.src", path), &a.src)?,
                obj(format!("{}.tgt", path), &a.tgt)?,
            );
            if trans.insert(a.id.clone(), arrow).is_some() {
                return Err(format!("{}: duplicate id '{}'", path, a.id));
            }
        }
        let mut hors: HashMap<String, HorArrow> = HashMap::new();
        for (ix, a) in desc.hor_arrows.iter().enumerate() {
            let path = format!("hor_arrows[{}]", ix);
            let arrow = HorArrow::new(
                key(&a.id),
                obj(format!("{}.src", path), &a.src)?,
                obj(format!("{}.tgt", path), &a.tgt)?,
            );
            if hors.insert(a.id.clone(), arrow).is_some() {
                return Err(format!("{}: duplicate id '{}'", path, a.id));
            }
        }
        let mut verts: HashMap<String, VertArrow> = HashMap::new();
        for (ix, a) in desc.vert_arrows.iter().enumerate() {
            let path = format!("vert_arrows[{}]", ix);
            let arrow = VertArrow::new(
                key(&a.id),
                obj(format!("{}.src", path), &a.src)?,
                obj(format!("{}.tgt", path), &a.tgt)?,
            );
            if verts.insert(a.id.clone(), arrow).is_some() {
                return Err(format!("{}: duplicate id '{}'", path, a.id));
            }
        }
        let get_trans = |path: String, id: &str| -> Result<TransArrow, String> {
            trans.get(id).cloned().ok_or(format!("{}: unknown transversal arrow '{}'", path, id))
        };
        let get_hor = |path: String, id: &str| -> Result<HorArrow, String> {
            hors.get(id).cloned().ok_or(format!("{}: unknown horizontal arrow '{}'", path, id))
        };
        let get_vert = |path: String, id: &str| -> Result<VertArrow, String> {
            verts.get(id).cloned().ok_or(format!("{}: unknown vertical arrow '{}'", path, id))
        };

        let mut hor_cells: HashMap<String, HorCell> = HashMap::new();
        for (ix, c) in desc.hor_cells.iter().enumerate() {
            let path = format!("hor_cells[{}]", ix);
            let cell = HorCell {
                id: key(&c.id),
                top: get_hor(format!("{}.top", path), &c.top)?,
                bottom: get_hor(format!("{}.bottom", path), &c.bottom)?,
                left: get_trans(format!("{}.left", path), &c.left)?,
                right: get_trans(format!("{}.right", path), &c.right)?,
            };
            validate::hor_cell(&cell).map_err(|e| format!("{}: {}", path, e))?;
            if hor_cells.insert(c.id.clone(), cell).is_some() {
                return Err(format!("{}: duplicate id '{}'", path, c.id));
            }
        }
        let mut vert_cells: HashMap<String, VertCell> = HashMap::new();
        for (ix, c) in desc.vert_cells.iter().enumerate() {
            let path = format!("vert_cells[{}]", ix);
            let cell = VertCell {
                id: key(&c.id),
                left: get_vert(format!("{}.left", path), &c.left)?,
                right: get_vert(format!("{}.right", path), &c.right)?,
                top: get_trans(format!("{}.top", path), &c.top)?,
                bottom: get_trans(format!("{}.bottom", path), &c.bottom)?,
            };
            validate::vert_cell(&cell).map_err(|e| format!("{}: {}", path, e))?;
            if vert_cells.insert(c.id.clone(), cell).is_some() {
                return Err(format!("{}: duplicate id '{}'", path, c.id));
            }
        }
        let mut basics: HashMap<String, BasicCell> = HashMap::new();
        for (ix, c) in desc.basic_cells.iter().enumerate() {
            let path = format!("basic_cells[{}]", ix);
            let cell = BasicCell {
                id: key(&c.id),
                top: get_hor(format!("{}.top", path), &c.top)?,
                bottom: get_hor(format!("{}.bottom", path), &c.bottom)?,
                left: get_vert(format!("{}.left", path), &c.left)?,
                right: get_vert(format!("{}.right", path), &c.right)?,
            };
            validate::basic_cell(&cell).map_err(|e| format!("{}: {}", path, e))?;
            if basics.insert(c.id.clone(), cell).is_some() {
                return Err(format!("{}: duplicate id '{}'", path, c.id));
            }
        }
        let get_hc = |path: String, id: &str| -> Result<HorCell, String> {
            hor_cells.get(id).cloned().ok_or(format!("{}: unknown horizontal cell '{}'", path, id))
        };
        let get_vc = |path: String, id: &str| -> Result<VertCell, String> {
            vert_cells.get(id).cloned().ok_or(format!("{}: unknown vertical cell '{}'", path, id))
        };
        let get_bc = |path: String, id: &str| -> Result<BasicCell, String> {
            basics.get(id).cloned().ok_or(format!("{}: unknown basic cell '{}'", path, id))
        };
        let mut cubes: HashMap<String, Cube> = HashMap::new();
        for (ix, c) in desc.cubes.iter().enumerate() {
            let path = format!("cubes[{}]", ix);
            let cube = Cube {
                id: key(&c.id),
                back: get_bc(format!("{}.back", path), &c.back)?,
                front: get_bc(format!("{}.front", path), &c.front)?,
                top: get_hc(format!("{}.top", path), &c.top)?,
                bottom: get_hc(format!("{}.bottom", path), &c.bottom)?,
                left: get_vc(format!("{}.left", path), &c.left)?,
                right: get_vc(format!("{}.right", path), &c.right)?,
            };
            validate::cube(&cube).map_err(|e| format!("{}: {}", path, e))?;
            if cubes.insert(c.id.clone(), cube).is_some() {
                return Err(format!("{}: duplicate id '{}'", path, c.id));
            }
        }
        let get_cube = |path: String, id: &str| -> Result<Cube, String> {
            cubes.get(id).cloned().ok_or(format!("{}: unknown cube '{}'", path, id))
        };

        let mut inst = TableInstance {
            name: if desc.name.is_empty() { "table".into() } else { desc.name.clone() },
            chirality,
            objects: {
                let mut v: Vec<ObjId> = objects.values().cloned().collect();
                v.sort();
                v
            },
            trans: {
                let mut v: Vec<TransArrow> = trans.values().cloned().collect();
                v.sort();
                v
            },
            hors: {
                let mut v: Vec<HorArrow> = hors.values().cloned().collect();
                v.sort();
                v
            },
            verts: {
                let mut v: Vec<VertArrow> = verts.values().cloned().collect();
                v.sort();
                v
            },
            hor_cells: {
                let mut v: Vec<HorCell> = hor_cells.values().cloned().collect();
                v.sort();
                v
            },
            vert_cells: {
                let mut v: Vec<VertCell> = vert_cells.values().cloned().collect();
                v.sort();
                v
            },
            basics: {
                let mut v: Vec<BasicCell> = basics.values().cloned().collect();
                v.sort();
                v
            },
            cubes: {
                let mut v: Vec<Cube> = cubes.values().cloned().collect();
                v.sort();
                v
            },
            t_comp_trans: HashMap::new(),
            t_comp_hor_cell: HashMap::new(),
            t_comp_vert_cell: HashMap::new(),
            t_comp_cube: HashMap::new(),
            t_id_obj: HashMap::new(),
            t_id_hor: HashMap::new(),
            t_id_vert: HashMap::new(),
            t_id_basic: HashMap::new(),
            h_comp_hor: HashMap::new(),
            h_comp_hor_cell: HashMap::new(),
            h_comp_basic: HashMap::new(),
            h_comp_cube: HashMap::new(),
            v_comp_vert: HashMap::new(),
            v_comp_vert_cell: HashMap::new(),
            v_comp_basic: HashMap::new(),
            v_comp_cube: HashMap::new(),
            hid_obj: HashMap::new(),
            vid_obj: HashMap::new(),
            hid_trans: HashMap::new(),
            vid_trans: HashMap::new(),
            hid_vert: HashMap::new(),
            vid_hor: HashMap::new(),
            hid_vert_cell: HashMap::new(),
            vid_hor_cell: HashMap::new(),
            assoc_h_arr: HashMap::new(),
            unit_l_h_arr: HashMap::new(),
            unit_r_h_arr: HashMap::new(),
            assoc_v_arr: HashMap::new(),
            unit_l_v_arr: HashMap::new(),
            unit_r_v_arr: HashMap::new(),
            assoc_h_cell: HashMap::new(),
            unit_l_h_cell: HashMap::new(),
            unit_r_h_cell: HashMap::new(),
            assoc_v_cell: HashMap::new(),
            unit_l_v_cell: HashMap::new(),
            unit_r_v_cell: HashMap::new(),
            chi: HashMap::new(),
            mu: HashMap::new(),
            delta: HashMap::new(),
            tau: HashMap::new(),
        };

        // composition tables with boundary coherence checks
        for (ix, [a, b, r]) in desc.t_comp.arrows.iter().enumerate() {
            let path = format!("t_comp.arrows[{}]", ix);
            let fa = get_trans(path.clone(), a)?;
            let fb = get_trans(path.clone(), b)?;
            let fr = get_trans(path.clone(), r)?;
            if fa.tgt != fb.src || fr.src != fa.src || fr.tgt != fb.tgt {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.t_comp_trans.insert((fa.id.clone(), fb.id.clone()), fr);
        }
        for (ix, [a, b, r]) in desc.t_comp.hor_cells.iter().enumerate() {
            let path = format!("t_comp.hor_cells[{}]", ix);
            let (ca, cb, cr) = (get_hc(path.clone(), a)?, get_hc(path.clone(), b)?, get_hc(path.clone(), r)?);
            if ca.bottom != cb.top || cr.top != ca.top || cr.bottom != cb.bottom {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.t_comp_hor_cell.insert((ca.id.clone(), cb.id.clone()), cr);
        }
        for (ix, [a, b, r]) in desc.t_comp.vert_cells.iter().enumerate() {
            let path = format!("t_comp.vert_cells[{}]", ix);
            let (ca, cb, cr) = (get_vc(path.clone(), a)?, get_vc(path.clone(), b)?, get_vc(path.clone(), r)?);
            if ca.right != cb.left || cr.left != ca.left || cr.right != cb.right {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.t_comp_vert_cell.insert((ca.id.clone(), cb.id.clone()), cr);
        }
        for (ix, [a, b, r]) in desc.t_comp.cubes.iter().enumerate() {
            let path = format!("t_comp.cubes[{}]", ix);
            let (ca, cb, cr) = (get_cube(path.clone(), a)?, get_cube(path.clone(), b)?, get_cube(path.clone(), r)?);
            if ca.front != cb.back || cr.back != ca.back || cr.front != cb.front {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.t_comp_cube.insert((ca.id.clone(), cb.id.clone()), cr);
        }
        for (ix, [a, b, r]) in desc.h_comp.arrows.iter().enumerate() {
            let path = format!("h_comp.arrows[{}]", ix);
            let (fa, fb, fr) = (get_hor(path.clone(), a)?, get_hor(path.clone(), b)?, get_hor(path.clone(), r)?);
            if fa.tgt != fb.src || fr.src != fa.src || fr.tgt != fb.tgt {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.h_comp_hor.insert((fa.id.clone(), fb.id.clone()), fr);
        }
        for (ix, [a, b, r]) in desc.h_comp.hor_cells.iter().enumerate() {
            let path = format!("h_comp.hor_cells[{}]", ix);
            let (ca, cb, cr) = (get_hc(path.clone(), a)?, get_hc(path.clone(), b)?, get_hc(path.clone(), r)?);
            if ca.right != cb.left || cr.left != ca.left || cr.right != cb.right {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.h_comp_hor_cell.insert((ca.id.clone(), cb.id.clone()), cr);
        }
        for (ix, [a, b, r]) in desc.h_comp.basic_cells.iter().enumerate() {
            let path = format!("h_comp.basic_cells[{}]", ix);
            let (ca, cb, cr) = (get_bc(path.clone(), a)?, get_bc(path.clone(), b)?, get_bc(path.clone(), r)?);
            if ca.right != cb.left || cr.left != ca.left || cr.right != cb.right {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.h_comp_basic.insert((ca.id.clone(), cb.id.clone()), cr);
        }
        for (ix, [a, b, r]) in desc.h_comp.cubes.iter().enumerate() {
            let path = format!("h_comp.cubes[{}]", ix);
            let (ca, cb, cr) = (get_cube(path.clone(), a)?, get_cube(path.clone(), b)?, get_cube(path.clone(), r)?);
            if ca.right != cb.left {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.h_comp_cube.insert((ca.id.clone(), cb.id.clone()), cr);
        }
        for (ix, [a, b, r]) in desc.v_comp.arrows.iter().enumerate() {
            let path = format!("v_comp.arrows[{}]", ix);
            let (fa, fb, fr) = (get_vert(path.clone(), a)?, get_vert(path.clone(), b)?, get_vert(path.clone(), r)?);
            if fa.tgt != fb.src || fr.src != fa.src || fr.tgt != fb.tgt {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.v_comp_vert.insert((fa.id.clone(), fb.id.clone()), fr);
        }
        for (ix, [a, b, r]) in desc.v_comp.vert_cells.iter().enumerate() {
            let path = format!("v_comp.vert_cells[{}]", ix);
            let (ca, cb, cr) = (get_vc(path.clone(), a)?, get_vc(path.clone(), b)?, get_vc(path.clone(), r)?);
            if ca.bottom != cb.top || cr.top != ca.top || cr.bottom != cb.bottom {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.v_comp_vert_cell.insert((ca.id.clone(), cb.id.clone()), cr);
        }
        for (ix, [a, b, r]) in desc.v_comp.basic_cells.iter().enumerate() {
            let path = format!("v_comp.basic_cells[{}]", ix);
            let (ca, cb, cr) = (get_bc(path.clone(), a)?, get_bc(path.clone(), b)?, get_bc(path.clone(), r)?);
            if ca.bottom != cb.top || cr.top != ca.top || cr.bottom != cb.bottom {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.v_comp_basic.insert((ca.id.clone(), cb.id.clone()), cr);
        }
        for (ix, [a, b, r]) in desc.v_comp.cubes.iter().enumerate() {
            let path = format!("v_comp.cubes[{}]", ix);
            let (ca, cb, cr) = (get_cube(path.clone(), a)?, get_cube(path.clone(), b)?, get_cube(path.clone(), r)?);
            if ca.bottom != cb.top {
                return Err(format!("{}: boundary mismatch", path));
            }
            inst.v_comp_cube.insert((ca.id.clone(), cb.id.clone()), cr);
        }
        for (ix, [a, r]) in desc.t_id.objects.iter().enumerate() {
            let path = format!("t_id.objects[{}]", ix);
            let o = obj(path.clone(), a)?;
            let f = get_trans(path.clone(), r)?;
            if f.src != o || f.tgt != o {
                return Err(format!("{}: identity endpoints", path));
            }
            inst.t_id_obj.insert(o.0, f);
        }
        for (ix, [a, r]) in desc.t_id.hor_arrows.iter().enumerate() {
            let path = format!("t_id.hor_arrows[{}]", ix);
            let h = get_hor(path.clone(), a)?;
            let c = get_hc(path.clone(), r)?;
            if c.top != h || c.bottom != h {
                return Err(format!("{}: identity boundary", path));
            }
            inst.t_id_hor.insert(h.id, c);
        }
        for (ix, [a, r]) in desc.t_id.vert_arrows.iter().enumerate() {
            let path = format!("t_id.vert_arrows[{}]", ix);
            let v = get_vert(path.clone(), a)?;
            let c = get_vc(path.clone(), r)?;
            if c.left != v || c.right != v {
                return Err(format!("{}: identity boundary", path));
            }
            inst.t_id_vert.insert(v.id, c);
        }
        for (ix, [a, r]) in desc.t_id.basic_cells.iter().enumerate() {
            let path = format!("t_id.basic_cells[{}]", ix);
            let b = get_bc(path.clone(), a)?;
            let c = get_cube(path.clone(), r)?;
            if c.back != b || c.front != b {
                return Err(format!("{}: identity boundary", path));
            }
            inst.t_id_basic.insert(b.id, c);
        }
        for (ix, [a, r]) in desc.weak_ids.hid_obj.iter().enumerate() {
            let path = format!("weak_ids.hid_obj[{}]", ix);
            let o = obj(path.clone(), a)?;
            let h = get_hor(path.clone(), r)?;
            if h.src != o || h.tgt != o {
                return Err(format!("{}: weak identity endpoints", path));
            }
            inst.hid_obj.insert(o.0, h);
        }
        for (ix, [a, r]) in desc.weak_ids.vid_obj.iter().enumerate() {
            let path = format!("weak_ids.vid_obj[{}]", ix);
            let o = obj(path.clone(), a)?;
            let v = get_vert(path.clone(), r)?;
            if v.src != o || v.tgt != o {
                return Err(format!("{}: weak identity endpoints", path));
            }
            inst.vid_obj.insert(o.0, v);
        }
        for (ix, [a, r]) in desc.weak_ids.hid_trans.iter().enumerate() {
            let path = format!("weak_ids.hid_trans[{}]", ix);
            let f = get_trans(path.clone(), a)?;
            let c = get_hc(path.clone(), r)?;
            if c.left != f || c.right != f {
                return Err(format!("{}: weak identity boundary", path));
            }
            inst.hid_trans.insert(f.id, c);
        }
        for (ix, [a, r]) in desc.weak_ids.vid_trans.iter().enumerate() {
            let path = format!("weak_ids.vid_trans[{}]", ix);
            let f = get_trans(path.clone(), a)?;
            let c = get_vc(path.clone(), r)?;
            if c.top != f || c.bottom != f {
                return Err(format!("{}: weak identity boundary", path));
            }
            inst.vid_trans.insert(f.id, c);
        }
        for (ix, [a, r]) in desc.weak_ids.hid_vert.iter().enumerate() {
            let path = format!("weak_ids.hid_vert[{}]", ix);
            let v = get_vert(path.clone(), a)?;
            let c = get_bc(path.clone(), r)?;
            if c.left != v || c.right != v {
                return Err(format!("{}: weak identity boundary", path));
            }
            inst.hid_vert.insert(v.id, c);
        }
        for (ix, [a, r]) in desc.weak_ids.vid_hor.iter().enumerate() {
            let path = format!("weak_ids.vid_hor[{}]", ix);
            let h = get_hor(path.clone(), a)?;
            let c = get_bc(path.clone(), r)?;
            if c.top != h || c.bottom != h {
                return Err(format!("{}: weak identity boundary", path));
            }
            inst.vid_hor.insert(h.id, c);
        }
        for (ix, [a, r]) in desc.weak_ids.hid_vert_cell.iter().enumerate() {
            let path = format!("weak_ids.hid_vert_cell[{}]", ix);
            let psi = get_vc(path.clone(), a)?;
            let c = get_cube(path.clone(), r)?;
            if c.left != psi || c.right != psi {
                return Err(format!("{}: weak identity boundary", path));
            }
            inst.hid_vert_cell.insert(psi.id, c);
        }
        for (ix, [a, r]) in desc.weak_ids.vid_hor_cell.iter().enumerate() {
            let path = format!("weak_ids.vid_hor_cell[{}]", ix);
            let phi = get_hc(path.clone(), a)?;
            let c = get_cube(path.clone(), r)?;
            if c.top != phi || c.bottom != phi {
                return Err(format!("{}: weak identity boundary", path));
            }
            inst.vid_hor_cell.insert(phi.id, c);
        }
        for (ix, [a, b, c, f, i]) in desc.structural.assoc_h_arr.iter().enumerate() {
            let path = format!("structural.assoc_h_arr[{}]", ix);
            let (ha, hb, hc) = (get_hor(path.clone(), a)?, get_hor(path.clone(), b)?, get_hor(path.clone(), c)?);
            let fwd = get_hc(path.clone(), f)?;
            let inv = get_hc(path.clone(), i)?;
            inst.assoc_h_arr.insert((ha.id, hb.id, hc.id), (fwd, inv));
        }
        for (ix, [a, f, i]) in desc.structural.unit_l_h_arr.iter().enumerate() {
            let path = format!("structural.unit_l_h_arr[{}]", ix);
            let h = get_hor(path.clone(), a)?;
            inst.unit_l_h_arr.insert(h.id, (get_hc(path.clone(), f)?, get_hc(path.clone(), i)?));
        }
        for (ix, [a, f, i]) in desc.structural.unit_r_h_arr.iter().enumerate() {
            let path = format!("structural.unit_r_h_arr[{}]", ix);
            let h = get_hor(path.clone(), a)?;
            inst.unit_r_h_arr.insert(h.id, (get_hc(path.clone(), f)?, get_hc(path.clone(), i)?));
        }
        for (ix, [a, b, c, f, i]) in desc.structural.assoc_v_arr.iter().enumerate() {
            let path = format!("structural.assoc_v_arr[{}]", ix);
            let (va, vb, vc) = (get_vert(path.clone(), a)?, get_vert(path.clone(), b)?, get_vert(path.clone(), c)?);
            inst.assoc_v_arr.insert((va.id, vb.id, vc.id), (get_vc(path.clone(), f)?, get_vc(path.clone(), i)?));
        }
        for (ix, [a, f, i]) in desc.structural.unit_l_v_arr.iter().enumerate() {
            let path = format!("structural.unit_l_v_arr[{}]", ix);
            let v = get_vert(path.clone(), a)?;
            inst.unit_l_v_arr.insert(v.id, (get_vc(path.clone(), f)?, get_vc(path.clone(), i)?));
        }
        for (ix, [a, f, i]) in desc.structural.unit_r_v_arr.iter().enumerate() {
            let path = format!("structural.unit_r_v_arr[{}]", ix);
            let v = get_vert(path.clone(), a)?;
            inst.unit_r_v_arr.insert(v.id, (get_vc(path.clone(), f)?, get_vc(path.clone(), i)?));
        }
        for (ix, [a, b, c, f, i]) in desc.structural.assoc_h_cell.iter().enumerate() {
            let path = format!("structural.assoc_h_cell[{}]", ix);
            let (ba, bb, bc) = (get_bc(path.clone(), a)?, get_bc(path.clone(), b)?, get_bc(path.clone(), c)?);
            inst.assoc_h_cell.insert((ba.id, bb.id, bc.id), (get_cube(path.clone(), f)?, get_cube(path.clone(), i)?));
        }
        for (ix, [a, f, i]) in desc.structural.unit_l_h_cell.iter().enumerate() {
            let path = format!("structural.unit_l_h_cell[{}]", ix);
            let b = get_bc(path.clone(), a)?;
            inst.unit_l_h_cell.insert(b.id, (get_cube(path.clone(), f)?, get_cube(path.clone(), i)?));
        }
        for (ix, [a, f, i]) in desc.structural.unit_r_h_cell.iter().enumerate() {
            let path = format!("structural.unit_r_h_cell[{}]", ix);
            let b = get_bc(path.clone(), a)?;
            inst.unit_r_h_cell.insert(b.id, (get_cube(path.clone(), f)?, get_cube(path.clone(), i)?));
        }
        for (ix, [a, b, c, f, i]) in desc.structural.assoc_v_cell.iter().enumerate() {
            let path = format!("structural.assoc_v_cell[{}]", ix);
            let (ba, bb, bc) = (get_bc(path.clone(), a)?, get_bc(path.clone(), b)?, get_bc(path.clone(), c)?);
            inst.assoc_v_cell.insert((ba.id, bb.id, bc.id), (get_cube(path.clone(), f)?, get_cube(path.clone(), i)?));
        }
        for (ix, [a, f, i]) in desc.structural.unit_l_v_cell.iter().enumerate() {
            let path = format!("structural.unit_l_v_cell[{}]", ix);
            let b = get_bc(path.clone(), a)?;
            inst.unit_l_v_cell.insert(b.id, (get_cube(path.clone(), f)?, get_cube(path.clone(), i)?));
        }
        for (ix, [a, f, i]) in desc.structural.unit_r_v_cell.iter().enumerate() {
            let path = format!("structural.unit_r_v_cell[{}]", ix);
            let b = get_bc(path.clone(), a)?;
            inst.unit_r_v_cell.insert(b.id, (get_cube(path.clone(), f)?, get_cube(path.clone(), i)?));
        }
        for (ix, [a, b, c, d, r]) in desc.interchangers.chi.iter().enumerate() {
            let path = format!("interchangers.chi[{}]", ix);
            let (ba, bb, bc, bd) = (
                get_bc(path.clone(), a)?,
                get_bc(path.clone(), b)?,
                get_bc(path.clone(), c)?,
                get_bc(path.clone(), d)?,
            );
            inst.chi.insert((ba.id, bb.id, bc.id, bd.id), get_cube(path.clone(), r)?);
        }
        for (ix, [a, b, r]) in desc.interchangers.mu.iter().enumerate() {
            let path = format!("interchangers.mu[{}]", ix);
            let (va, vb) = (get_vert(path.clone(), a)?, get_vert(path.clone(), b)?);
            inst.mu.insert((va.id, vb.id), get_cube(path.clone(), r)?);
        }
        for (ix, [a, b, r]) in desc.interchangers.delta.iter().enumerate() {
            let path = format!("interchangers.delta[{}]", ix);
            let (ha, hb) = (get_hor(path.clone(), a)?, get_hor(path.clone(), b)?);
            inst.delta.insert((ha.id, hb.id), get_cube(path.clone(), r)?);
        }
        for (ix, [a, r]) in desc.interchangers.tau.iter().enumerate() {
            let path = format!("interchangers.tau[{}]", ix);
            let o = obj(path.clone(), a)?;
            inst.tau.insert(o.0, get_cube(path.clone(), r)?);
        }
        Ok(inst)
    }

    pub fn load_json(json: &str) -> Result<TableInstance, String> {
        TableInstance::load(&InstanceDescription::from_json(json)?)
    }
}

impl InterInstance for TableInstance {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn chirality(&self) -> Chirality {
        self.chirality
    }

    fn objects(&self) -> Vec<ObjId> {
        self.objects.clone()
    }

    fn trans_arrows(&self) -> Vec<TransArrow> {
        self.trans.clone()
    }

    fn hor_arrows(&self) -> Vec<HorArrow> {
        self.hors.clone()
    }

    fn vert_arrows(&self) -> Vec<VertArrow> {
        self.verts.clone()
    }

    fn hor_cells(&self) -> Vec<HorCell> {
        self.hor_cells.clone()
    }

    fn vert_cells(&self) -> Vec<VertCell> {
        self.vert_cells.clone()
    }

    fn basic_cells(&self) -> Vec<BasicCell> {
        self.basics.clone()
    }

    fn cubes(&self) -> Vec<Cube> {
        self.cubes.clone()
    }

    fn t_comp_trans(&self, f: &TransArrow, g: &TransArrow) -> OpResult<TransArrow> {
        lookup2!(self.t_comp_trans, "t_comp_trans", f, g)
    }

    fn t_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell> {
        lookup2!(self.t_comp_hor_cell, "t_comp_hor_cell", a, b)
    }

    fn t_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell> {
        lookup2!(self.t_comp_vert_cell, "t_comp_vert_cell", a, b)
    }

    fn t_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        lookup2!(self.t_comp_cube, "t_comp_cube", a, b)
    }

    fn t_id_obj(&self, a: &ObjId) -> OpResult<TransArrow> {
        self.t_id_obj.get(&a.0).cloned().ok_or_else(|| OpError::missing("t_id_obj", a))
    }

    fn t_id_hor(&self, h: &HorArrow) -> OpResult<HorCell> {
        lookup1!(self.t_id_hor, "t_id_hor", h)
    }

    fn t_id_vert(&self, v: &VertArrow) -> OpResult<VertCell> {
        lookup1!(self.t_id_vert, "t_id_vert", v)
    }

    fn t_id_basic(&self, c: &BasicCell) -> OpResult<Cube> {
        lookup1!(self.t_id_basic, "t_id_basic", c)
    }

    fn h_comp_hor(&self, h: &HorArrow, k: &HorArrow) -> OpResult<HorArrow> {
        lookup2!(self.h_comp_hor, "h_comp_hor", h, k)
    }

    fn h_comp_hor_cell(&self, a: &HorCell, b: &HorCell) -> OpResult<HorCell> {
        lookup2!(self.h_comp_hor_cell, "h_comp_hor_cell", a, b)
    }

    fn h_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
        lookup2!(self.h_comp_basic, "h_comp_basic", a, b)
    }

    fn h_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        lookup2!(self.h_comp_cube, "h_comp_cube", a, b)
    }

    fn v_comp_vert(&self, v: &VertArrow, w: &VertArrow) -> OpResult<VertArrow> {
        lookup2!(self.v_comp_vert, "v_comp_vert", v, w)
    }

    fn v_comp_vert_cell(&self, a: &VertCell, b: &VertCell) -> OpResult<VertCell> {
        lookup2!(self.v_comp_vert_cell, "v_comp_vert_cell", a, b)
    }

    fn v_comp_basic(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
        lookup2!(self.v_comp_basic, "v_comp_basic", a, b)
    }

    fn v_comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        lookup2!(self.v_comp_cube, "v_comp_cube", a, b)
    }

    fn hid_obj(&self, a: &ObjId) -> OpResult<HorArrow> {
        self.hid_obj.get(&a.0).cloned().ok_or_else(|| OpError::missing("hid_obj", a))
    }

    fn vid_obj(&self, a: &ObjId) -> OpResult<VertArrow> {
        self.vid_obj.get(&a.0).cloned().ok_or_else(|| OpError::missing("vid_obj", a))
    }

    fn hid_trans(&self, f: &TransArrow) -> OpResult<HorCell> {
        lookup1!(self.hid_trans, "hid_trans", f)
    }

    fn vid_trans(&self, f: &TransArrow) -> OpResult<VertCell> {
        lookup1!(self.vid_trans, "vid_trans", f)
    }

    fn hid_vert(&self, v: &VertArrow) -> OpResult<BasicCell> {
        lookup1!(self.hid_vert, "hid_vert", v)
    }

    fn vid_hor(&self, h: &HorArrow) -> OpResult<BasicCell> {
        lookup1!(self.vid_hor, "vid_hor", h)
    }

    fn hid_vert_cell(&self, psi: &VertCell) -> OpResult<Cube> {
        lookup1!(self.hid_vert_cell, "hid_vert_cell", psi)
    }

    fn vid_hor_cell(&self, phi: &HorCell) -> OpResult<Cube> {
        lookup1!(self.vid_hor_cell, "vid_hor_cell", phi)
    }

    fn assoc_h_arr(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell> {
        self.assoc_h_arr
            .get(&(h.id.clone(), k.id.clone(), l.id.clone()))
            .map(|p| p.0.clone())
            .ok_or_else(|| OpError::missing("assoc_h_arr", (h, k, l)))
    }

    fn assoc_h_arr_inv(&self, h: &HorArrow, k: &HorArrow, l: &HorArrow) -> OpResult<HorCell> {
        self.assoc_h_arr
            .get(&(h.id.clone(), k.id.clone(), l.id.clone()))
            .map(|p| p.1.clone())
            .ok_or_else(|| OpError::missing("assoc_h_arr_inv", (h, k, l)))
    }

    fn unit_l_h_arr(&self, h: &HorArrow) -> OpResult<HorCell> {
        self.unit_l_h_arr.get(&h.id).map(|p| p.0.clone()).ok_or_else(|| OpError::missing("unit_l_h_arr", h))
    }

    fn unit_l_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell> {
        self.unit_l_h_arr.get(&h.id).map(|p| p.1.clone()).ok_or_else(|| OpError::missing("unit_l_h_arr_inv", h))
    }

    fn unit_r_h_arr(&self, h: &HorArrow) -> OpResult<HorCell> {
        self.unit_r_h_arr.get(&h.id).map(|p| p.0.clone()).ok_or_else(|| OpError::missing("unit_r_h_arr", h))
    }

    fn unit_r_h_arr_inv(&self, h: &HorArrow) -> OpResult<HorCell> {
        self.unit_r_h_arr.get(&h.id).map(|p| p.1.clone()).ok_or_else(|| OpError::missing("unit_r_h_arr_inv", h))
    }

    fn assoc_v_arr(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell> {
        self.assoc_v_arr
            .get(&(v.id.clone(), w.id.clone(), x.id.clone()))
            .map(|p| p.0.clone())
            .ok_or_else(|| OpError::missing("assoc_v_arr", (v, w, x)))
    }

    fn assoc_v_arr_inv(&self, v: &VertArrow, w: &VertArrow, x: &VertArrow) -> OpResult<VertCell> {
        self.assoc_v_arr
            .get(&(v.id.clone(), w.id.clone(), x.id.clone()))
            .map(|p| p.1.clone())
            .ok_or_else(|| OpError::missing("assoc_v_arr_inv", (v, w, x)))
    }

    fn unit_l_v_arr(&self, v: &VertArrow) -> OpResult<VertCell> {
        self.unit_l_v_arr.get(&v.id).map(|p| p.0.clone()).ok_or_else(|| OpError::missing("unit_l_v_arr", v))
    }

    fn unit_l_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell> {
        self.unit_l_v_arr.get(&v.id).map(|p| p.1.clone()).ok_or_else(|| OpError::missing("unit_l_v_arr_inv", v))
    }

    fn unit_r_v_arr(&self, v: &VertArrow) -> OpResult<VertCell> {
        self.unit_r_v_arr.get(&v.id).map(|p| p.0.clone()).ok_or_else(|| OpError::missing("unit_r_v_arr", v))
    }

    fn unit_r_v_arr_inv(&self, v: &VertArrow) -> OpResult<VertCell> {
        self.unit_r_v_arr.get(&v.id).map(|p| p.1.clone()).ok_or_else(|| OpError::missing("unit_r_v_arr_inv", v))
    }

    fn assoc_h_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        self.assoc_h_cell
            .get(&(a.id.clone(), b.id.clone(), c.id.clone()))
            .map(|p| p.0.clone())
            .ok_or_else(|| OpError::missing("assoc_h_cell", (a, b, c)))
    }

    fn assoc_h_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        self.assoc_h_cell
            .get(&(a.id.clone(), b.id.clone(), c.id.clone()))
            .map(|p| p.1.clone())
            .ok_or_else(|| OpError::missing("assoc_h_cell_inv", (a, b, c)))
    }

    fn unit_l_h_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        self.unit_l_h_cell.get(&a.id).map(|p| p.0.clone()).ok_or_else(|| OpError::missing("unit_l_h_cell", a))
    }

    fn unit_l_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        self.unit_l_h_cell.get(&a.id).map(|p| p.1.clone()).ok_or_else(|| OpError::missing("unit_l_h_cell_inv", a))
    }

    fn unit_r_h_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        self.unit_r_h_cell.get(&a.id).map(|p| p.0.clone()).ok_or_else(|| OpError::missing("unit_r_h_cell", a))
    }

    fn unit_r_h_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        self.unit_r_h_cell.get(&a.id).map(|p| p.1.clone()).ok_or_else(|| OpError::missing("unit_r_h_cell_inv", a))
    }

    fn assoc_v_cell(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        self.assoc_v_cell
            .get(&(a.id.clone(), b.id.clone(), c.id.clone()))
            .map(|p| p.0.clone())
            .ok_or_else(|| OpError::missing("assoc_v_cell", (a, b, c)))
    }

    fn assoc_v_cell_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        self.assoc_v_cell
            .get(&(a.id.clone(), b.id.clone(), c.id.clone()))
            .map(|p| p.1.clone())
            .ok_or_else(|| OpError::missing("assoc_v_cell_inv", (a, b, c)))
    }

    fn unit_l_v_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        self.unit_l_v_cell.get(&a.id).map(|p| p.0.clone()).ok_or_else(|| OpError::missing("unit_l_v_cell", a))
    }

    fn unit_l_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        self.unit_l_v_cell.get(&a.id).map(|p| p.1.clone()).ok_or_else(|| OpError::missing("unit_l_v_cell_inv", a))
    }

    fn unit_r_v_cell(&self, a: &BasicCell) -> OpResult<Cube> {
        self.unit_r_v_cell.get(&a.id).map(|p| p.0.clone()).ok_or_else(|| OpError::missing("unit_r_v_cell", a))
    }

    fn unit_r_v_cell_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        self.unit_r_v_cell.get(&a.id).map(|p| p.1.clone()).ok_or_else(|| OpError::missing("unit_r_v_cell_inv", a))
    }

    fn chi(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell, d: &BasicCell) -> OpResult<Cube> {
        self.chi
            .get(&(a.id.clone(), b.id.clone(), c.id.clone(), d.id.clone()))
            .cloned()
            .ok_or_else(|| OpError::missing("chi", (a, b, c, d)))
    }

    fn mu(&self, v: &VertArrow, w: &VertArrow) -> OpResult<Cube> {
        lookup2!(self.mu, "mu", v, w)
    }

    fn delta(&self, h: &HorArrow, k: &HorArrow) -> OpResult<Cube> {
        lookup2!(self.delta, "delta", h, k)
    }

    fn tau(&self, a: &ObjId) -> OpResult<Cube> {
        self.tau.get(&a.0).cloned().ok_or_else(|| OpError::missing("tau", a))
    }
}

// ---- built-in table descriptions ----

/// The terminal instance: exactly one element of every sort.
pub fn terminal_description() -> InstanceDescription {
    let mut d = InstanceDescription {
        schema: SCHEMA.into(),
        name: "terminal".into(),
        objects: vec!["A".into()],
        trans_arrows: vec![ArrowDesc { id: "f".into(), src: "A".into(), tgt: "A".into() }],
        hor_arrows: vec![ArrowDesc { id: "h".into(), src: "A".into(), tgt: "A".into() }],
        vert_arrows: vec![ArrowDesc { id: "v".into(), src: "A".into(), tgt: "A".into() }],
        hor_cells: vec![HorCellDesc {
            id: "hc".into(),
            top: "h".into(),
            bottom: "h".into(),
            left: "f".into(),
            right: "f".into(),
        }],
        vert_cells: vec![VertCellDesc {
            id: "vc".into(),
            left: "v".into(),
            right: "v".into(),
            top: "f".into(),
            bottom: "f".into(),
        }],
        basic_cells: vec![BasicCellDesc {
            id: "b".into(),
            top: "h".into(),
            bottom: "h".into(),
            left: "v".into(),
            right: "v".into(),
        }],
        cubes: vec![CubeDesc {
            id: "q".into(),
            back: "b".into(),
            front: "b".into(),
            top: "hc".into(),
            bottom: "hc".into(),
            left: "vc".into(),
            right: "vc".into(),
        }],
        ..Default::default()
    };
    let s = |x: &str| x.to_string();
    d.t_comp.arrows.push([s("f"), s("f"), s("f")]);
    d.t_comp.hor_cells.push([s("hc"), s("hc"), s("hc")]);
    d.t_comp.vert_cells.push([s("vc"), s("vc"), s("vc")]);
    d.t_comp.cubes.push([s("q"), s("q"), s("q")]);
    d.t_id.objects.push([s("A"), s("f")]);
    d.t_id.hor_arrows.push([s("h"), s("hc")]);
    d.t_id.vert_arrows.push([s("v"), s("vc")]);
    d.t_id.basic_cells.push([s("b"), s("q")]);
    d.h_comp.arrows.push([s("h"), s("h"), s("h")]);
    d.h_comp.hor_cells.push([s("hc"), s("hc"), s("hc")]);
    d.h_comp.basic_cells.push([s("b"), s("b"), s("b")]);
    d.h_comp.cubes.push([s("q"), s("q"), s("q")]);
    d.v_comp.arrows.push([s("v"), s("v"), s("v")]);
    d.v_comp.vert_cells.push([s("vc"), s("vc"), s("vc")]);
    d.v_comp.basic_cells.push([s("b"), s("b"), s("b")]);
    d.v_comp.cubes.push([s("q"), s("q"), s("q")]);
    d.weak_ids.hid_obj.push([s("A"), s("h")]);
    d.weak_ids.vid_obj.push([s("A"), s("v")]);
    d.weak_ids.hid_trans.push([s("f"), s("hc")]);
    d.weak_ids.vid_trans.push([s("f"), s("vc")]);
    d.weak_ids.hid_vert.push([s("v"), s("b")]);
    d.weak_ids.vid_hor.push([s("h"), s("b")]);
    d.weak_ids.hid_vert_cell.push([s("vc"), s("q")]);
    d.weak_ids.vid_hor_cell.push([s("hc"), s("q")]);
    d.structural.assoc_h_arr.push([s("h"), s("h"), s("h"), s("hc"), s("hc")]);
    d.structural.unit_l_h_arr.push([s("h"), s("hc"), s("hc")]);
    d.structural.unit_r_h_arr.push([s("h"), s("hc"), s("hc")]);
    d.structural.assoc_v_arr.push([s("v"), s("v"), s("v"), s("vc"), s("vc")]);
    d.structural.unit_l_v_arr.push([s("v"), s("vc"), s("vc")]);
    d.structural.unit_r_v_arr.push([s("v"), s("vc"), s("vc")]);
    d.structural.assoc_h_cell.push([s("b"), s("b"), s("b"), s("q"), s("q")]);
    d.structural.unit_l_h_cell.push([s("b"), s("q"), s("q")]);
    d.structural.unit_r_h_cell.push([s("b"), s("q"), s("q")]);
    d.structural.assoc_v_cell.push([s("b"), s("b"), s("b"), s("q"), s("q")]);
    d.structural.unit_l_v_cell.push([s("b"), s("q"), s("q")]);
    d.structural.unit_r_v_cell.push([s("b"), s("q"), s("q")]);
    d.interchangers.chi.push([s("b"), s("b"), s("b"), s("b"), s("q")]);
    d.interchangers.mu.push([s("v"), s("v"), s("q")]);
    d.interchangers.delta.push([s("h"), s("h"), s("q")]);
    d.interchangers.tau.push([s("A"), s("q")]);
    d
}

/// One object, one arrow of each kind, one basic cell, cubes forming the
/// two-element group under all three compositions. Every structural cube
/// and interchanger defaults to the identity element `z`, so the instance
/// satisfies all the laws, and flipping a single table entry to `u` breaks
/// exactly the laws that consult it.
pub fn parity_description() -> InstanceDescription {
    let mut d = terminal_description();
    d.name = "parity".into();
    d.cubes = vec![
        CubeDesc {
            id: "z".into(),
            back: "b".into(),
            front: "b".into(),
            top: "hc".into(),
            bottom: "hc".into(),
            left: "vc".into(),
            right: "vc".into(),
        },
        CubeDesc {
            id: "u".into(),
            back: "b".into(),
            front: "b".into(),
            top: "hc".into(),
            bottom: "hc".into(),
            left: "vc".into(),
            right: "vc".into(),
        },
    ];
    let s = |x: &str| x.to_string();
    d.t_comp.cubes = vec![
        [s("z"), s("z"), s("z")],
        [s("z"), s("u"), s("u")],
        [s("u"), s("z"), s("u")],
        [s("u"), s("u"), s("z")],
    ];
    d.h_comp.cubes = d.t_comp.cubes.clone();
    d.v_comp.cubes = d.t_comp.cubes.clone();
    d.t_id.basic_cells = vec![[s("b"), s("z")]];
    d.weak_ids.hid_vert_cell = vec![[s("vc"), s("z")]];
    d.weak_ids.vid_hor_cell = vec![[s("hc"), s("z")]];
    d.structural.assoc_h_cell = vec![[s("b"), s("b"), s("b"), s("z"), s("z")]];
    d.structural.unit_l_h_cell = vec![[s("b"), s("z"), s("z")]];
    d.structural.unit_r_h_cell = vec![[s("b"), s("z"), s("z")]];
    d.structural.assoc_v_cell = vec![[s("b"), s("b"), s("b"), s("z"), s("z")]];
    d.structural.unit_l_v_cell = vec![[s("b"), s("z"), s("z")]];
    d.structural.unit_r_v_cell = vec![[s("b"), s("z"), s("z")]];
    d.interchangers.chi = vec![[s("b"), s("b"), s("b"), s("b"), s("z")]];
    d.interchangers.mu = vec![[s("v"), s("v"), s("z")]];
    d.interchangers.delta = vec![[s("h"), s("h"), s("z")]];
    d.interchangers.tau = vec![[s("A"), s("z")]];
    d
}

/// Targets for parity corruption: which table entry to flip from `z` to `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParityCorruption {
    AssocH,
    AssocV,
    UnitLH,
    UnitRH,
    UnitLV,
    UnitRV,
    Chi,
    Mu,
    Delta,
    Tau,
}

/// The parity instance with one structural or interchanger entry flipped.
pub fn corrupted_parity_description(target: ParityCorruption) -> InstanceDescription {
    let mut d = parity_description();
    d.name = format!("parity!{:?}", target);
    let s = |x: &str| x.to_string();
    match target {
        ParityCorruption::AssocH => {
            d.structural.assoc_h_cell = vec![[s("b"), s("b"), s("b"), s("u"), s("u")]]
        }
        ParityCorruption::AssocV => {
            d.structural.assoc_v_cell = vec![[s("b"), s("b"), s("b"), s("u"), s("u")]]
        }
        ParityCorruption::UnitLH => d.structural.unit_l_h_cell = vec![[s("b"), s("u"), s("u")]],
        ParityCorruption::UnitRH => d.structural.unit_r_h_cell = vec![[s("b"), s("u"), s("u")]],
        ParityCorruption::UnitLV => d.structural.unit_l_v_cell = vec![[s("b"), s("u"), s("u")]],
        ParityCorruption::UnitRV => d.structural.unit_r_v_cell = vec![[s("b"), s("u"), s("u")]],
        ParityCorruption::Chi => d.interchangers.chi = vec![[s("b"), s("b"), s("b"), s("b"), s("u")]],
        ParityCorruption::Mu => d.interchangers.mu = vec![[s("v"), s("v"), s("u")]],
        ParityCorruption::Delta => d.interchangers.delta = vec![[s("h"), s("h"), s("u")]],
        ParityCorruption::Tau => d.interchangers.tau = vec![[s("A"), s("u")]],
    }
    d
}

/// A hand-written two-object instance: everything is an identity except a
/// single nonidentity transversal arrow and the cells it carries.
pub fn two_object_description() -> InstanceDescription {
    let s = |x: &str| x.to_string();
    let mut d = InstanceDescription {
        schema: SCHEMA.into(),
        name: "two-object".into(),
        objects: vec![s("A"), s("B")],
        trans_arrows: vec![
            ArrowDesc { id: s("idA"), src: s("A"), tgt: s("A") },
            ArrowDesc { id: s("idB"), src: s("B"), tgt: s("B") },
            ArrowDesc { id: s("f"), src: s("A"), tgt: s("B") },
        ],
        hor_arrows: vec![
            ArrowDesc { id: s("hA"), src: s("A"), tgt: s("A") },
            ArrowDesc { id: s("hB"), src: s("B"), tgt: s("B") },
        ],
        vert_arrows: vec![
            ArrowDesc { id: s("vA"), src: s("A"), tgt: s("A") },
            ArrowDesc { id: s("vB"), src: s("B"), tgt: s("B") },
        ],
        hor_cells: vec![
            HorCellDesc { id: s("hcA"), top: s("hA"), bottom: s("hA"), left: s("idA"), right: s("idA") },
            HorCellDesc { id: s("hcB"), top: s("hB"), bottom: s("hB"), left: s("idB"), right: s("idB") },
            HorCellDesc { id: s("hcF"), top: s("hA"), bottom: s("hB"), left: s("f"), right: s("f") },
        ],
        vert_cells: vec![
            VertCellDesc { id: s("vcA"), left: s("vA"), right: s("vA"), top: s("idA"), bottom: s("idA") },
            VertCellDesc { id: s("vcB"), left: s("vB"), right: s("vB"), top: s("idB"), bottom: s("idB") },
            VertCellDesc { id: s("vcF"), left: s("vA"), right: s("vB"), top: s("f"), bottom: s("f") },
        ],
        basic_cells: vec![
            BasicCellDesc { id: s("bA"), top: s("hA"), bottom: s("hA"), left: s("vA"), right: s("vA") },
            BasicCellDesc { id: s("bB"), top: s("hB"), bottom: s("hB"), left: s("vB"), right: s("vB") },
        ],
        cubes: vec![
            CubeDesc { id: s("qA"), back: s("bA"), front: s("bA"), top: s("hcA"), bottom: s("hcA"), left: s("vcA"), right: s("vcA") },
            CubeDesc { id: s("qB"), back: s("bB"), front: s("bB"), top: s("hcB"), bottom: s("hcB"), left: s("vcB"), right: s("vcB") },
            CubeDesc { id: s("qF"), back: s("bA"), front: s("bB"), top: s("hcF"), bottom: s("hcF"), left: s("vcF"), right: s("vcF") },
        ],
        ..Default::default()
    };
    d.t_comp.arrows = vec![
        [s("idA"), s("idA"), s("idA")],
        [s("idB"), s("idB"), s("idB")],
        [s("idA"), s("f"), s("f")],
        [s("f"), s("idB"), s("f")],
    ];
    d.t_comp.hor_cells = vec![
        [s("hcA"), s("hcA"), s("hcA")],
        [s("hcB"), s("hcB"), s("hcB")],
        [s("hcA"), s("hcF"), s("hcF")],
        [s("hcF"), s("hcB"), s("hcF")],
    ];
    d.t_comp.vert_cells = vec![
        [s("vcA"), s("vcA"), s("vcA")],
        [s("vcB"), s("vcB"), s("vcB")],
        [s("vcA"), s("vcF"), s("vcF")],
        [s("vcF"), s("vcB"), s("vcF")],
    ];
    d.t_comp.cubes = vec![
        [s("qA"), s("qA"), s("qA")],
        [s("qB"), s("qB"), s("qB")],
        [s("qA"), s("qF"), s("qF")],
        [s("qF"), s("qB"), s("qF")],
    ];
    d.t_id.objects = vec![[s("A"), s("idA")], [s("B"), s("idB")]];
    d.t_id.hor_arrows = vec![[s("hA"), s("hcA")], [s("hB"), s("hcB")]];
    d.t_id.vert_arrows = vec![[s("vA"), s("vcA")], [s("vB"), s("vcB")]];
    d.t_id.basic_cells = vec![[s("bA"), s("qA")], [s("bB"), s("qB")]];
    d.h_comp.arrows = vec![[s("hA"), s("hA"), s("hA")], [s("hB"), s("hB"), s("hB")]];
    d.h_comp.hor_cells = vec![
        [s("hcA"), s("hcA"), s("hcA")],
        [s("hcB"), s("hcB"), s("hcB")],
        [s("hcF"), s("hcF"), s("hcF")],
    ];
    d.h_comp.basic_cells = vec![[s("bA"), s("bA"), s("bA")], [s("bB"), s("bB"), s("bB")]];
    d.h_comp.cubes = vec![
        [s("qA"), s("qA"), s("qA")],
        [s("qB"), s("qB"), s("qB")],
        [s("qF"), s("qF"), s("qF")],
    ];
    d.v_comp.arrows = vec![[s("vA"), s("vA"), s("vA")], [s("vB"), s("vB"), s("vB")]];
    d.v_comp.vert_cells = vec![
        [s("vcA"), s("vcA"), s("vcA")],
        [s("vcB"), s("vcB"), s("vcB")],
        [s("vcF"), s("vcF"), s("vcF")],
    ];
    d.v_comp.basic_cells = vec![[s("bA"), s("bA"), s("bA")], [s("bB"), s("bB"), s("bB")]];
    d.v_comp.cubes = vec![
        [s("qA"), s("qA"), s("qA")],
        [s("qB"), s("qB"), s("qB")],
        [s("qF"), s("qF"), s("qF")],
    ];
    d.weak_ids.hid_obj = vec![[s("A"), s("hA")], [s("B"), s("hB")]];
    d.weak_ids.vid_obj = vec![[s("A"), s("vA")], [s("B"), s("vB")]];
    d.weak_ids.hid_trans = vec![[s("idA"), s("hcA")], [s("idB"), s("hcB")], [s("f"), s("hcF")]];
    d.weak_ids.vid_trans = vec![[s("idA"), s("vcA")], [s("idB"), s("vcB")], [s("f"), s("vcF")]];
    d.weak_ids.hid_vert = vec![[s("vA"), s("bA")], [s("vB"), s("bB")]];
    d.weak_ids.vid_hor = vec![[s("hA"), s("bA")], [s("hB"), s("bB")]];
    d.weak_ids.hid_vert_cell = vec![[s("vcA"), s("qA")], [s("vcB"), s("qB")], [s("vcF"), s("qF")]];
    d.weak_ids.vid_hor_cell = vec![[s("hcA"), s("qA")], [s("hcB"), s("qB")], [s("hcF"), s("qF")]];
    d.structural.assoc_h_arr = vec![
        [s("hA"), s("hA"), s("hA"), s("hcA"), s("hcA")],
        [s("hB"), s("hB"), s("hB"), s("hcB"), s("hcB")],
    ];
    d.structural.unit_l_h_arr = vec![[s("hA"), s("hcA"), s("hcA")], [s("hB"), s("hcB"), s("hcB")]];
    d.structural.unit_r_h_arr = vec![[s("hA"), s("hcA"), s("hcA")], [s("hB"), s("hcB"), s("hcB")]];
    d.structural.assoc_v_arr = vec![
        [s("vA"), s("vA"), s("vA"), s("vcA"), s("vcA")],
        [s("vB"), s("vB"), s("vB"), s("vcB"), s("vcB")],
    ];
    d.structural.unit_l_v_arr = vec![[s("vA"), s("vcA"), s("vcA")], [s("vB"), s("vcB"), s("vcB")]];
    d.structural.unit_r_v_arr = vec![[s("vA"), s("vcA"), s("vcA")], [s("vB"), s("vcB"), s("vcB")]];
    d.structural.assoc_h_cell = vec![
        [s("bA"), s("bA"), s("bA"), s("qA"), s("qA")],
        [s("bB"), s("bB"), s("bB"), s("qB"), s("qB")],
    ];
    d.structural.unit_l_h_cell = vec![[s("bA"), s("qA"), s("qA")], [s("bB"), s("qB"), s("qB")]];
    d.structural.unit_r_h_cell = vec![[s("bA"), s("qA"), s("qA")], [s("bB"), s("qB"), s("qB")]];
    d.structural.assoc_v_cell = vec![
        [s("bA"), s("bA"), s("bA"), s("qA"), s("qA")],
        [s("bB"), s("bB"), s("bB"), s("qB"), s("qB")],
    ];
    d.structural.unit_l_v_cell = vec![[s("bA"), s("qA"), s("qA")], [s("bB"), s("qB"), s("qB")]];
    d.structural.unit_r_v_cell = vec![[s("bA"), s("qA"), s("qA")], [s("bB"), s("qB"), s("qB")]];
    d.interchangers.chi = vec![
        [s("bA"), s("bA"), s("bA"), s("bA"), s("qA")],
        [s("bB"), s("bB"), s("bB"), s("bB"), s("qB")],
    ];
    d.interchangers.mu = vec![[s("vA"), s("vA"), s("qA")], [s("vB"), s("vB"), s("qB")]];
    d.interchangers.delta = vec![[s("hA"), s("hA"), s("qA")], [s("hB"), s("hB"), s("qB")]];
    d.interchangers.tau = vec![[s("A"), s("qA")], [s("B"), s("qB")]];
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::{check_all, CheckConfig};

    #[test]
    fn terminal_loads_and_passes_with_one_instance_per_law() {
        let inst = TableInstance::load(&terminal_description()).unwrap();
        let report = check_all(&inst, &CheckConfig::with_budget(100, 0));
        for r in &report.reports {
            assert!(r.passed(), "law {} failed", r.law);
            assert!(r.checked >= 1, "law {} unchecked", r.law);
        }
    }

    #[test]
    fn parity_and_two_object_pass() {
        for desc in [parity_description(), two_object_description()] {
            let inst = TableInstance::load(&desc).unwrap();
            let report = check_all(&inst, &CheckConfig::with_budget(200, 0));
            for r in &report.reports {
                assert!(r.passed(), "{}: law {} failed: {:?}", desc.name, r.law, r.failures.first());
            }
        }
    }

    #[test]
    fn boundary_violations_are_rejected_with_path() {
        let mut desc = terminal_description();
        desc.basic_cells[0].top = "nope".into();
        let err = TableInstance::load(&desc).err().expect("load should fail");
        assert!(err.contains("basic_cells[0]"), "{}", err);
        assert!(err.contains("nope"), "{}", err);

        // boundary-rule violation rather than a dangling id
        let mut desc = two_object_description();
        desc.basic_cells[0].right = "vB".into();
        let err = TableInstance::load(&desc).err().expect("load should fail");
        assert!(err.contains("basic_cells[0]"), "{}", err);
    }

    #[test]
    fn corrupted_parity_breaks_targeted_laws() {
        use crate::laws::LawId;
        let cases = [
            (ParityCorruption::AssocV, vec![LawId::Coherence(21), LawId::Coherence(24)]),
            (ParityCorruption::UnitLV, vec![LawId::Coherence(22), LawId::Coherence(25)]),
            (ParityCorruption::UnitRV, vec![LawId::Coherence(23), LawId::Coherence(26)]),
            (ParityCorruption::AssocH, vec![LawId::Coherence(27), LawId::Coherence(28)]),
            (ParityCorruption::UnitLH, vec![LawId::Coherence(29), LawId::Coherence(30)]),
            (ParityCorruption::UnitRH, vec![LawId::Coherence(31), LawId::Coherence(32)]),
        ];
        for (corruption, expect_failing) in cases {
            let inst = TableInstance::load(&corrupted_parity_description(corruption)).unwrap();
            let report = check_all(&inst, &CheckConfig::with_budget(100, 0));
            let failing = report.failing_laws();
            for law in &expect_failing {
                assert!(
                    failing.contains(law),
                    "{:?}: expected {} to fail, failing: {:?}",
                    corruption,
                    law,
                    failing
                );
            }
        }
    }
}
