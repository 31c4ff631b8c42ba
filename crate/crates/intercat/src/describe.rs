//! Self-describing JSON format for table-backed instances, morphisms and
//! cells, plus export of any instance into it.
//!
//! Identifiers are strings and boundary references are by id, so
//! counterexample instances can be written by hand. Loading validates
//! eagerly: every referenced id must resolve and every declared cell and
//! table entry must satisfy the boundary rules, with errors reporting a path
//! into the description. Exported descriptions are truncations: they record
//! the enumerated elements closed under the operations to a fixed depth, and
//! the checker skips tuples that fall outside the recorded tables.

use crate::model::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA: &str = "intercat/instance/v1";
pub const REPORT_SCHEMA: &str = "intercat/report/v1";

// exported descriptions are truncations; these caps bound their size
const MAX_PER_SORT: usize = 64;
const MAX_TABLE_ENTRIES: usize = 4_000;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct InstanceDescription {
    #[serde(default)]
    pub schema: String,
    #[serde(default)]
    pub name: String,
    /// "right" (default) or "left".
    #[serde(default)]
    pub chirality: Option<String>,
    pub objects: Vec<String>,
    #[serde(default)]
    pub trans_arrows: Vec<ArrowDesc>,
    #[serde(default)]
    pub hor_arrows: Vec<ArrowDesc>,
    #[serde(default)]
    pub vert_arrows: Vec<ArrowDesc>,
    #[serde(default)]
    pub hor_cells: Vec<HorCellDesc>,
    #[serde(default)]
    pub vert_cells: Vec<VertCellDesc>,
    #[serde(default)]
    pub basic_cells: Vec<BasicCellDesc>,
    #[serde(default)]
    pub cubes: Vec<CubeDesc>,
    #[serde(default)]
    pub t_comp: CompTables,
    #[serde(default)]
    pub t_id: IdTables,
    #[serde(default)]
    pub h_comp: CompTables,
    #[serde(default)]
    pub v_comp: CompTables,
    #[serde(default)]
    pub weak_ids: WeakIdTables,
    #[serde(default)]
    pub structural: StructuralTables,
    #[serde(default)]
    pub interchangers: InterchangerTables,
    #[serde(default)]
    pub morphisms: Vec<MorphismDescription>,
    #[serde(default)]
    pub cells: Vec<CellDescription>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct ArrowDesc {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct HorCellDesc {
    pub id: String,
    pub top: String,
    pub bottom: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct VertCellDesc {
    pub id: String,
    pub left: String,
    pub right: String,
    pub top: String,
    pub bottom: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct BasicCellDesc {
    pub id: String,
    pub top: String,
    pub bottom: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, PartialOrd, Ord)]
pub struct CubeDesc {
    pub id: String,
    pub back: String,
    pub front: String,
    pub top: String,
    pub bottom: String,
    pub left: String,
    pub right: String,
}

/// Composition tables, one entry per defined composite: `[lhs, rhs, result]`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct CompTables {
    #[serde(default)]
    pub arrows: Vec<[String; 3]>,
    #[serde(default)]
    pub hor_cells: Vec<[String; 3]>,
    #[serde(default)]
    pub vert_cells: Vec<[String; 3]>,
    #[serde(default)]
    pub basic_cells: Vec<[String; 3]>,
    #[serde(default)]
    pub cubes: Vec<[String; 3]>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct IdTables {
    #[serde(default)]
    pub objects: Vec<[String; 2]>,
    #[serde(default)]
    pub hor_arrows: Vec<[String; 2]>,
    #[serde(default)]
    pub vert_arrows: Vec<[String; 2]>,
    #[serde(default)]
    pub basic_cells: Vec<[String; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct WeakIdTables {
    #[serde(default)]
    pub hid_obj: Vec<[String; 2]>,
    #[serde(default)]
    pub vid_obj: Vec<[String; 2]>,
    #[serde(default)]
    pub hid_trans: Vec<[String; 2]>,
    #[serde(default)]
    pub vid_trans: Vec<[String; 2]>,
    #[serde(default)]
    pub hid_vert: Vec<[String; 2]>,
    #[serde(default)]
    pub vid_hor: Vec<[String; 2]>,
    #[serde(default)]
    pub hid_vert_cell: Vec<[String; 2]>,
    #[serde(default)]
    pub vid_hor_cell: Vec<[String; 2]>,
}

/// Structural comparison cells with their inverses:
/// `[args.., forward, inverse]`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct StructuralTables {
    #[serde(default)]
    pub assoc_h_arr: Vec<[String; 5]>,
    #[serde(default)]
    pub unit_l_h_arr: Vec<[String; 3]>,
    #[serde(default)]
    pub unit_r_h_arr: Vec<[String; 3]>,
    #[serde(default)]
    pub assoc_v_arr: Vec<[String; 5]>,
    #[serde(default)]
    pub unit_l_v_arr: Vec<[String; 3]>,
    #[serde(default)]
    pub unit_r_v_arr: Vec<[String; 3]>,
    #[serde(default)]
    pub assoc_h_cell: Vec<[String; 5]>,
    #[serde(default)]
    pub unit_l_h_cell: Vec<[String; 3]>,
    #[serde(default)]
    pub unit_r_h_cell: Vec<[String; 3]>,
    #[serde(default)]
    pub assoc_v_cell: Vec<[String; 5]>,
    #[serde(default)]
    pub unit_l_v_cell: Vec<[String; 3]>,
    #[serde(default)]
    pub unit_r_v_cell: Vec<[String; 3]>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct InterchangerTables {
    #[serde(default)]
    pub chi: Vec<[String; 5]>,
    #[serde(default)]
    pub mu: Vec<[String; 3]>,
    #[serde(default)]
    pub delta: Vec<[String; 3]>,
    #[serde(default)]
    pub tau: Vec<[String; 2]>,
}

/// Description of an endo-morphism of the instance in the same file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct MorphismDescription {
    pub id: String,
    /// "lax-lax", "colax-lax" or "colax-colax".
    pub kind: String,
    #[serde(default)]
    pub obj_map: Vec<[String; 2]>,
    #[serde(default)]
    pub trans_map: Vec<[String; 2]>,
    #[serde(default)]
    pub hor_map: Vec<[String; 2]>,
    #[serde(default)]
    pub vert_map: Vec<[String; 2]>,
    #[serde(default)]
    pub hor_cell_map: Vec<[String; 2]>,
    #[serde(default)]
    pub vert_cell_map: Vec<[String; 2]>,
    #[serde(default)]
    pub basic_map: Vec<[String; 2]>,
    #[serde(default)]
    pub cube_map: Vec<[String; 2]>,
    /// object -> vertical cell id
    #[serde(default)]
    pub phi_v_obj: Vec<[String; 2]>,
    /// horizontal arrow -> cube id
    #[serde(default)]
    pub phi_v_hor: Vec<[String; 2]>,
    /// composable vertical pair -> vertical cell id
    #[serde(default)]
    pub phi_v_pair: Vec<[String; 3]>,
    /// vertically composable basic-cell pair -> cube id
    #[serde(default)]
    pub phi_v_cells: Vec<[String; 3]>,
    /// object -> horizontal cell id
    #[serde(default)]
    pub phi_h_obj: Vec<[String; 2]>,
    /// vertical arrow -> cube id
    #[serde(default)]
    pub phi_h_vert: Vec<[String; 2]>,
    /// composable horizontal pair -> horizontal cell id
    #[serde(default)]
    pub phi_h_pair: Vec<[String; 3]>,
    /// horizontally composable basic-cell pair -> cube id
    #[serde(default)]
    pub phi_h_cells: Vec<[String; 3]>,
}

/// Description of a double cell between morphisms declared in the file.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct CellDescription {
    pub id: String,
    /// "h" (lax-lax / colax-lax), "v" (colax-lax / colax-colax) or
    /// "b" (lax-lax / colax-colax).
    pub shape: String,
    pub top: String,
    pub bottom: String,
    pub left: String,
    pub right: String,
    #[serde(default)]
    pub pi_obj: Vec<[String; 2]>,
    #[serde(default)]
    pub pi_vert: Vec<[String; 2]>,
    #[serde(default)]
    pub pi_hor: Vec<[String; 2]>,
    #[serde(default)]
    pub pi_basic: Vec<[String; 2]>,
}

impl InstanceDescription {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("description serializes")
    }

    pub fn from_json(json: &str) -> Result<Self, String> {
        serde_json::from_str(json).map_err(|e| format!("invalid description JSON: {}", e))
    }

    /// Canonical form: every list sorted and the display name dropped, for
    /// presentation comparison.
    pub fn normalized(&self) -> InstanceDescription {
        let mut d = self.clone();
        d.schema = SCHEMA.to_string();
        d.name = String::new();
        d.objects.sort();
        d.trans_arrows.sort();
        d.hor_arrows.sort();
        d.vert_arrows.sort();
        d.hor_cells.sort();
        d.vert_cells.sort();
        d.basic_cells.sort();
        d.cubes.sort();
        let sort_comp = |t: &mut CompTables| {
            t.arrows.sort();
            t.hor_cells.sort();
            t.vert_cells.sort();
            t.basic_cells.sort();
            t.cubes.sort();
        };
        sort_comp(&mut d.t_comp);
        sort_comp(&mut d.h_comp);
        sort_comp(&mut d.v_comp);
        d.t_id.objects.sort();
        d.t_id.hor_arrows.sort();
        d.t_id.vert_arrows.sort();
        d.t_id.basic_cells.sort();
        d.weak_ids.hid_obj.sort();
        d.weak_ids.vid_obj.sort();
        d.weak_ids.hid_trans.sort();
        d.weak_ids.vid_trans.sort();
        d.weak_ids.hid_vert.sort();
        d.weak_ids.vid_hor.sort();
        d.weak_ids.hid_vert_cell.sort();
        d.weak_ids.vid_hor_cell.sort();
        d.structural.assoc_h_arr.sort();
        d.structural.unit_l_h_arr.sort();
        d.structural.unit_r_h_arr.sort();
        d.structural.assoc_v_arr.sort();
        d.structural.unit_l_v_arr.sort();
        d.structural.unit_r_v_arr.sort();
        d.structural.assoc_h_cell.sort();
        d.structural.unit_l_h_cell.sort();
        d.structural.unit_r_h_cell.sort();
        d.structural.assoc_v_cell.sort();
        d.structural.unit_l_v_cell.sort();
        d.structural.unit_r_v_cell.sort();
        d.interchangers.chi.sort();
        d.interchangers.mu.sort();
        d.interchangers.delta.sort();
        d.interchangers.tau.sort();
        d.morphisms.sort_by(|a, b| a.id.cmp(&b.id));
        d.cells.sort_by(|a, b| a.id.cmp(&b.id));
        d
    }

    /// Presentation equality: equality of normalized descriptions.
    pub fn presentation_eq(&self, other: &InstanceDescription) -> bool {
        self.normalized() == other.normalized()
    }
}

/// Exports any instance as a table description: the enumerated sorts are
/// closed under all operations to the given depth, and every operation
/// application whose result stayed inside the collected carrier is recorded.
pub fn export_instance(inst: &dyn InterInstance, closure_depth: usize) -> InstanceDescription {
    let mut carrier = Carrier::initial(inst);
    for _ in 0..closure_depth {
        carrier.grow(inst);
    }
    carrier.into_description(inst)
}

struct Carrier {
    objects: std::collections::BTreeSet<ObjId>,
    trans: std::collections::BTreeSet<TransArrow>,
    hors: std::collections::BTreeSet<HorArrow>,
    verts: std::collections::BTreeSet<VertArrow>,
    hor_cells: std::collections::BTreeSet<HorCell>,
    vert_cells: std::collections::BTreeSet<VertCell>,
    basics: std::collections::BTreeSet<BasicCell>,
    cubes: std::collections::BTreeSet<Cube>,
}

fn push_unique<T: Ord + Clone>(v: &mut std::collections::BTreeSet<T>, x: &T) {
    if v.len() < MAX_PER_SORT || v.contains(x) {
        v.insert(x.clone());
    }
}

impl Carrier {
    fn initial(inst: &dyn InterInstance) -> Carrier {
        Carrier {
            objects: inst.objects().into_iter().collect(),
            trans: inst.trans_arrows().into_iter().collect(),
            hors: inst.hor_arrows().into_iter().collect(),
            verts: inst.vert_arrows().into_iter().collect(),
            hor_cells: inst.hor_cells().into_iter().collect(),
            vert_cells: inst.vert_cells().into_iter().collect(),
            basics: inst.basic_cells().into_iter().collect(),
            cubes: inst.cubes().into_iter().collect(),
        }
    }

    /// One closure round: apply every operation to the current carrier and
    /// keep the results (and their boundaries).
    fn grow(&mut self, inst: &dyn InterInstance) {
        let snapshot_trans: Vec<_> = self.trans.iter().cloned().collect();
        let snapshot_hors: Vec<_> = self.hors.iter().cloned().collect();
        let snapshot_verts: Vec<_> = self.verts.iter().cloned().collect();
        let snapshot_hor_cells: Vec<_> = self.hor_cells.iter().cloned().collect();
        let snapshot_vert_cells: Vec<_> = self.vert_cells.iter().cloned().collect();
        let snapshot_basics: Vec<_> = self.basics.iter().cloned().collect();
        let snapshot_cubes: Vec<_> = self.cubes.iter().cloned().collect();

        let snapshot_objects: Vec<_> = self.objects.iter().cloned().collect();
        for a in &snapshot_objects {
            if let Ok(x) = inst.t_id_obj(a) {
                push_unique(&mut self.trans, &x);
            }
            if let Ok(x) = inst.hid_obj(a) {
                push_unique(&mut self.hors, &x);
            }
            if let Ok(x) = inst.vid_obj(a) {
                push_unique(&mut self.verts, &x);
            }
            if let Ok(x) = inst.tau(a) {
                self.add_cube(&x);
            }
        }
        for f in &snapshot_trans {
            for g in &snapshot_trans {
                if composable::t_trans(f, g) {
                    if let Ok(x) = inst.t_comp_trans(f, g) {
                        push_unique(&mut self.trans, &x);
                    }
                }
            }
            if let Ok(x) = inst.hid_trans(f) {
                push_unique(&mut self.hor_cells, &x);
            }
            if let Ok(x) = inst.vid_trans(f) {
                push_unique(&mut self.vert_cells, &x);
            }
        }
        let mut new_hors: std::collections::BTreeSet<HorArrow> = Default::default();
        for h in &snapshot_hors {
            for k in &snapshot_hors {
                if composable::h_hor(h, k) {
                    if let Ok(x) = inst.h_comp_hor(h, k) {
                        push_unique(&mut new_hors, &x);
                    }
                }
            }
            if let Ok(x) = inst.t_id_hor(h) {
                push_unique(&mut self.hor_cells, &x);
            }
            if let Ok(x) = inst.vid_hor(h) {
                push_unique(&mut self.basics, &x);
            }
        }
        for h in new_hors {
            push_unique(&mut self.hors, &h);
        }
        let mut new_verts: std::collections::BTreeSet<VertArrow> = Default::default();
        for v in &snapshot_verts {
            for w in &snapshot_verts {
                if composable::v_vert(v, w) {
                    if let Ok(x) = inst.v_comp_vert(v, w) {
                        push_unique(&mut new_verts, &x);
                    }
                }
            }
            if let Ok(x) = inst.t_id_vert(v) {
                push_unique(&mut self.vert_cells, &x);
            }
            if let Ok(x) = inst.hid_vert(v) {
                push_unique(&mut self.basics, &x);
            }
        }
        for v in new_verts {
            push_unique(&mut self.verts, &v);
        }
        // arrow-level structural cells
        for h in &snapshot_hors {
            for cell in [inst.unit_l_h_arr(h), inst.unit_l_h_arr_inv(h), inst.unit_r_h_arr(h), inst.unit_r_h_arr_inv(h)]
                .into_iter()
                .flatten()
            {
                push_unique(&mut self.hor_cells, &cell);
            }
        }
        for v in &snapshot_verts {
            for cell in [inst.unit_l_v_arr(v), inst.unit_l_v_arr_inv(v), inst.unit_r_v_arr(v), inst.unit_r_v_arr_inv(v)]
                .into_iter()
                .flatten()
            {
                push_unique(&mut self.vert_cells, &cell);
            }
        }
        for h in &snapshot_hors {
            for k in &snapshot_hors {
                if !composable::h_hor(h, k) {
                    continue;
                }
                for l in &snapshot_hors {
                    if !composable::h_hor(k, l) {
                        continue;
                    }
                    for cell in [inst.assoc_h_arr(h, k, l), inst.assoc_h_arr_inv(h, k, l)].into_iter().flatten() {
                        push_unique(&mut self.hor_cells, &cell);
                    }
                }
            }
        }
        for v in &snapshot_verts {
            for w in &snapshot_verts {
                if !composable::v_vert(v, w) {
                    continue;
                }
                if let Ok(x) = inst.mu(v, w) {
                    self.add_cube(&x);
                }
                for x in &snapshot_verts {
                    if !composable::v_vert(w, x) {
                        continue;
                    }
                    for cell in [inst.assoc_v_arr(v, w, x), inst.assoc_v_arr_inv(v, w, x)].into_iter().flatten() {
                        push_unique(&mut self.vert_cells, &cell);
                    }
                }
            }
        }
        for h in &snapshot_hors {
            for k in &snapshot_hors {
                if composable::h_hor(h, k) {
                    if let Ok(x) = inst.delta(h, k) {
                        self.add_cube(&x);
                    }
                }
            }
        }
        // 2-cell compositions
        for a in &snapshot_hor_cells {
            for b in &snapshot_hor_cells {
                if composable::t_hor_cell(a, b) {
                    if let Ok(x) = inst.t_comp_hor_cell(a, b) {
                        push_unique(&mut self.hor_cells, &x);
                    }
                }
                if composable::h_hor_cell(a, b) {
                    if let Ok(x) = inst.h_comp_hor_cell(a, b) {
                        push_unique(&mut self.hor_cells, &x);
                    }
                }
            }
            if let Ok(x) = inst.vid_hor_cell(a) {
                self.add_cube(&x);
            }
        }
        for a in &snapshot_vert_cells {
            for b in &snapshot_vert_cells {
                if composable::t_vert_cell(a, b) {
                    if let Ok(x) = inst.t_comp_vert_cell(a, b) {
                        push_unique(&mut self.vert_cells, &x);
                    }
                }
                if composable::v_vert_cell(a, b) {
                    if let Ok(x) = inst.v_comp_vert_cell(a, b) {
                        push_unique(&mut self.vert_cells, &x);
                    }
                }
            }
            if let Ok(x) = inst.hid_vert_cell(a) {
                self.add_cube(&x);
            }
        }
        // basic cells: compositions, unit comparisons and interchange
        for a in &snapshot_basics {
            if let Ok(x) = inst.t_id_basic(a) {
                self.add_cube(&x);
            }
            for cube in [
                inst.unit_l_h_cell(a),
                inst.unit_l_h_cell_inv(a),
                inst.unit_r_h_cell(a),
                inst.unit_r_h_cell_inv(a),
                inst.unit_l_v_cell(a),
                inst.unit_l_v_cell_inv(a),
                inst.unit_r_v_cell(a),
                inst.unit_r_v_cell_inv(a),
            ]
            .into_iter()
            .flatten()
            {
                self.add_cube(&cube);
            }
            for b in &snapshot_basics {
                if composable::h_basic(a, b) {
                    if let Ok(x) = inst.h_comp_basic(a, b) {
                        push_unique(&mut self.basics, &x);
                    }
                }
                if composable::v_basic(a, b) {
                    if let Ok(x) = inst.v_comp_basic(a, b) {
                        push_unique(&mut self.basics, &x);
                    }
                }
            }
        }
        for a in &snapshot_basics {
            for b in &snapshot_basics {
                if !composable::h_basic(a, b) {
                    continue;
                }
                for c in &snapshot_basics {
                    if composable::h_basic(b, c) {
                        for cube in [inst.assoc_h_cell(a, b, c), inst.assoc_h_cell_inv(a, b, c)].into_iter().flatten() {
                            self.add_cube(&cube);
                        }
                    }
                    if composable::v_basic(a, c) {
                        for d in &snapshot_basics {
                            if composable::h_basic(c, d) && composable::v_basic(b, d) {
                                if let Ok(x) = inst.chi(a, b, c, d) {
                                    self.add_cube(&x);
                                }
                            }
                        }
                    }
                }
            }
        }
        for a in &snapshot_basics {
            for b in &snapshot_basics {
                if !composable::v_basic(a, b) {
                    continue;
                }
                for c in &snapshot_basics {
                    if composable::v_basic(b, c) {
                        for cube in [inst.assoc_v_cell(a, b, c), inst.assoc_v_cell_inv(a, b, c)].into_iter().flatten() {
                            self.add_cube(&cube);
                        }
                    }
                }
            }
        }
        // cube compositions
        for a in &snapshot_cubes {
            for b in &snapshot_cubes {
                if composable::t_cube(a, b) {
                    if let Ok(x) = inst.t_comp_cube(a, b) {
                        self.add_cube(&x);
                    }
                }
                if composable::h_cube(a, b) {
                    if let Ok(x) = inst.h_comp_cube(a, b) {
                        self.add_cube(&x);
                    }
                }
                if composable::v_cube(a, b) {
                    if let Ok(x) = inst.v_comp_cube(a, b) {
                        self.add_cube(&x);
                    }
                }
            }
        }
    }

    /// Adding a cube also adds its faces and their boundaries.
    fn add_cube(&mut self, c: &Cube) {
        push_unique(&mut self.cubes, c);
        push_unique(&mut self.basics, &c.back);
        push_unique(&mut self.basics, &c.front);
        push_unique(&mut self.hor_cells, &c.top);
        push_unique(&mut self.hor_cells, &c.bottom);
        push_unique(&mut self.vert_cells, &c.left);
        push_unique(&mut self.vert_cells, &c.right);
        for h in [&c.back.top, &c.back.bottom, &c.front.top, &c.front.bottom] {
            push_unique(&mut self.hors, h);
        }
        for v in [&c.back.left, &c.back.right, &c.front.left, &c.front.right] {
            push_unique(&mut self.verts, v);
        }
        for f in [&c.top.left, &c.top.right, &c.bottom.left, &c.bottom.right] {
            push_unique(&mut self.trans, f);
        }
    }

    fn into_description(mut self, inst: &dyn InterInstance) -> InstanceDescription {
        // close boundaries of everything collected
        for h in self.hor_cells.clone().into_iter() {
            push_unique(&mut self.hors, &h.top);
            push_unique(&mut self.hors, &h.bottom);
            push_unique(&mut self.trans, &h.left);
            push_unique(&mut self.trans, &h.right);
        }
        for v in self.vert_cells.clone().into_iter() {
            push_unique(&mut self.verts, &v.left);
            push_unique(&mut self.verts, &v.right);
            push_unique(&mut self.trans, &v.top);
            push_unique(&mut self.trans, &v.bottom);
        }
        for b in self.basics.clone().into_iter() {
            push_unique(&mut self.hors, &b.top);
            push_unique(&mut self.hors, &b.bottom);
            push_unique(&mut self.verts, &b.left);
            push_unique(&mut self.verts, &b.right);
        }
        for f in self.trans.clone().into_iter() {
            push_unique(&mut self.objects, &f.src);
            push_unique(&mut self.objects, &f.tgt);
        }
        for h in self.hors.clone().into_iter() {
            push_unique(&mut self.objects, &h.src);
            push_unique(&mut self.objects, &h.tgt);
        }
        for v in self.verts.clone().into_iter() {
            push_unique(&mut self.objects, &v.src);
            push_unique(&mut self.objects, &v.tgt);
        }

        let obj_ids: BTreeMap<ObjId, String> =
            self.objects.iter().enumerate().map(|(i, o)| (o.clone(), format!("ob{}", i))).collect();
        let trans_ids: BTreeMap<TransArrow, String> =
            self.trans.iter().enumerate().map(|(i, o)| (o.clone(), format!("tr{}", i))).collect();
        let hor_ids: BTreeMap<HorArrow, String> =
            self.hors.iter().enumerate().map(|(i, o)| (o.clone(), format!("h{}", i))).collect();
        let vert_ids: BTreeMap<VertArrow, String> =
            self.verts.iter().enumerate().map(|(i, o)| (o.clone(), format!("v{}", i))).collect();
        let hc_ids: BTreeMap<HorCell, String> =
            self.hor_cells.iter().enumerate().map(|(i, o)| (o.clone(), format!("hc{}", i))).collect();
        let vc_ids: BTreeMap<VertCell, String> =
            self.vert_cells.iter().enumerate().map(|(i, o)| (o.clone(), format!("vc{}", i))).collect();
        let bc_ids: BTreeMap<BasicCell, String> =
            self.basics.iter().enumerate().map(|(i, o)| (o.clone(), format!("b{}", i))).collect();
        let cube_ids: BTreeMap<Cube, String> =
            self.cubes.iter().enumerate().map(|(i, o)| (o.clone(), format!("q{}", i))).collect();

        let mut desc = InstanceDescription {
            schema: SCHEMA.to_string(),
            name: format!("{} (exported)", inst.name()),
            chirality: match inst.chirality() {
                Chirality::Right => None,
                Chirality::Left => Some("left".into()),
            },
            objects: obj_ids.values().cloned().collect(),
            trans_arrows: self
                .trans
                .iter()
                .map(|f| ArrowDesc {
                    id: trans_ids[f].clone(),
                    src: obj_ids[&f.src].clone(),
                    tgt: obj_ids[&f.tgt].clone(),
                })
                .collect(),
            hor_arrows: self
                .hors
                .iter()
                .map(|h| ArrowDesc {
                    id: hor_ids[h].clone(),
                    src: obj_ids[&h.src].clone(),
                    tgt: obj_ids[&h.tgt].clone(),
                })
                .collect(),
            vert_arrows: self
                .verts
                .iter()
                .map(|v| ArrowDesc {
                    id: vert_ids[v].clone(),
                    src: obj_ids[&v.src].clone(),
                    tgt: obj_ids[&v.tgt].clone(),
                })
                .collect(),
            hor_cells: self
                .hor_cells
                .iter()
                .map(|c| HorCellDesc {
                    id: hc_ids[c].clone(),
                    top: hor_ids[&c.top].clone(),
                    bottom: hor_ids[&c.bottom].clone(),
                    left: trans_ids[&c.left].clone(),
                    right: trans_ids[&c.right].clone(),
                })
                .collect(),
            vert_cells: self
                .vert_cells
                .iter()
                .map(|c| VertCellDesc {
                    id: vc_ids[c].clone(),
                    left: vert_ids[&c.left].clone(),
                    right: vert_ids[&c.right].clone(),
                    top: trans_ids[&c.top].clone(),
                    bottom: trans_ids[&c.bottom].clone(),
                })
                .collect(),
            basic_cells: self
                .basics
                .iter()
                .map(|c| BasicCellDesc {
                    id: bc_ids[c].clone(),
                    top: hor_ids[&c.top].clone(),
                    bottom: hor_ids[&c.bottom].clone(),
                    left: vert_ids[&c.left].clone(),
                    right: vert_ids[&c.right].clone(),
                })
                .collect(),
            cubes: self
                .cubes
                .iter()
                .map(|c| CubeDesc {
                    id: cube_ids[c].clone(),
                    back: bc_ids[&c.back].clone(),
                    front: bc_ids[&c.front].clone(),
                    top: hc_ids[&c.top].clone(),
                    bottom: hc_ids[&c.bottom].clone(),
                    left: vc_ids[&c.left].clone(),
                    right: vc_ids[&c.right].clone(),
                })
                .collect(),
            ..Default::default()
        };

        // record every operation application that stays in the carrier
        'tc: for f in &self.trans {
            for g in &self.trans {
                if desc.t_comp.arrows.len() >= MAX_TABLE_ENTRIES {
                    break 'tc;
                }
                if composable::t_trans(f, g) {
                    if let Ok(x) = inst.t_comp_trans(f, g) {
                        if let Some(xid) = trans_ids.get(&x) {
                            desc.t_comp.arrows.push([
                                trans_ids[f].clone(),
                                trans_ids[g].clone(),
                                xid.clone(),
                            ]);
                        }
                    }
                }
            }
        }
        macro_rules! record_comp {
            ($list:expr, $ids:expr, $table:expr, $pred:path, $op:expr) => {
                'rec: for a in &$list {
                    for b in &$list {
                        if $table.len() >= MAX_TABLE_ENTRIES {
                            break 'rec;
                        }
                        if $pred(a, b) {
                            if let Ok(x) = $op(a, b) {
                                if let Some(xid) = $ids.get(&x) {
                                    $table.push([$ids[a].clone(), $ids[b].clone(), xid.clone()]);
                                }
                            }
                        }
                    }
                }
            };
        }
        record_comp!(self.hor_cells, hc_ids, desc.t_comp.hor_cells, composable::t_hor_cell, |a, b| inst.t_comp_hor_cell(a, b));
        record_comp!(self.vert_cells, vc_ids, desc.t_comp.vert_cells, composable::t_vert_cell, |a, b| inst.t_comp_vert_cell(a, b));
        record_comp!(self.cubes, cube_ids, desc.t_comp.cubes, composable::t_cube, |a, b| inst.t_comp_cube(a, b));
        record_comp!(self.hors, hor_ids, desc.h_comp.arrows, composable::h_hor, |a, b| inst.h_comp_hor(a, b));
        record_comp!(self.hor_cells, hc_ids, desc.h_comp.hor_cells, composable::h_hor_cell, |a, b| inst.h_comp_hor_cell(a, b));
        record_comp!(self.basics, bc_ids, desc.h_comp.basic_cells, composable::h_basic, |a, b| inst.h_comp_basic(a, b));
        record_comp!(self.cubes, cube_ids, desc.h_comp.cubes, composable::h_cube, |a, b| inst.h_comp_cube(a, b));
        record_comp!(self.verts, vert_ids, desc.v_comp.arrows, composable::v_vert, |a, b| inst.v_comp_vert(a, b));
        record_comp!(self.vert_cells, vc_ids, desc.v_comp.vert_cells, composable::v_vert_cell, |a, b| inst.v_comp_vert_cell(a, b));
        record_comp!(self.basics, bc_ids, desc.v_comp.basic_cells, composable::v_basic, |a, b| inst.v_comp_basic(a, b));
        record_comp!(self.cubes, cube_ids, desc.v_comp.cubes, composable::v_cube, |a, b| inst.v_comp_cube(a, b));

        let snapshot_objects: Vec<_> = self.objects.iter().cloned().collect();
        for a in &snapshot_objects {
            if let Ok(x) = inst.t_id_obj(a) {
                if let Some(xid) = trans_ids.get(&x) {
                    desc.t_id.objects.push([obj_ids[a].clone(), xid.clone()]);
                }
            }
            if let Ok(x) = inst.hid_obj(a) {
                if let Some(xid) = hor_ids.get(&x) {
                    desc.weak_ids.hid_obj.push([obj_ids[a].clone(), xid.clone()]);
                }
            }
            if let Ok(x) = inst.vid_obj(a) {
                if let Some(xid) = vert_ids.get(&x) {
                    desc.weak_ids.vid_obj.push([obj_ids[a].clone(), xid.clone()]);
                }
            }
            if let Ok(x) = inst.tau(a) {
                if let Some(xid) = cube_ids.get(&x) {
                    desc.interchangers.tau.push([obj_ids[a].clone(), xid.clone()]);
                }
            }
        }
        for h in &self.hors {
            if let Ok(x) = inst.t_id_hor(h) {
                if let Some(xid) = hc_ids.get(&x) {
                    desc.t_id.hor_arrows.push([hor_ids[h].clone(), xid.clone()]);
                }
            }
            if let Ok(x) = inst.vid_hor(h) {
                if let Some(xid) = bc_ids.get(&x) {
                    desc.weak_ids.vid_hor.push([hor_ids[h].clone(), xid.clone()]);
                }
            }
            if let (Ok(x), Ok(y)) = (inst.unit_l_h_arr(h), inst.unit_l_h_arr_inv(h)) {
                if let (Some(xi), Some(yi)) = (hc_ids.get(&x), hc_ids.get(&y)) {
                    desc.structural.unit_l_h_arr.push([hor_ids[h].clone(), xi.clone(), yi.clone()]);
                }
            }
            if let (Ok(x), Ok(y)) = (inst.unit_r_h_arr(h), inst.unit_r_h_arr_inv(h)) {
                if let (Some(xi), Some(yi)) = (hc_ids.get(&x), hc_ids.get(&y)) {
                    desc.structural.unit_r_h_arr.push([hor_ids[h].clone(), xi.clone(), yi.clone()]);
                }
            }
        }
        for v in &self.verts {
            if let Ok(x) = inst.t_id_vert(v) {
                if let Some(xid) = vc_ids.get(&x) {
                    desc.t_id.vert_arrows.push([vert_ids[v].clone(), xid.clone()]);
                }
            }
            if let Ok(x) = inst.hid_vert(v) {
                if let Some(xid) = bc_ids.get(&x) {
                    desc.weak_ids.hid_vert.push([vert_ids[v].clone(), xid.clone()]);
                }
            }
            if let (Ok(x), Ok(y)) = (inst.unit_l_v_arr(v), inst.unit_l_v_arr_inv(v)) {
                if let (Some(xi), Some(yi)) = (vc_ids.get(&x), vc_ids.get(&y)) {
                    desc.structural.unit_l_v_arr.push([vert_ids[v].clone(), xi.clone(), yi.clone()]);
                }
            }
            if let (Ok(x), Ok(y)) = (inst.unit_r_v_arr(v), inst.unit_r_v_arr_inv(v)) {
                if let (Some(xi), Some(yi)) = (vc_ids.get(&x), vc_ids.get(&y)) {
                    desc.structural.unit_r_v_arr.push([vert_ids[v].clone(), xi.clone(), yi.clone()]);
                }
            }
        }
        for f in &self.trans {
            if let Ok(x) = inst.hid_trans(f) {
                if let Some(xid) = hc_ids.get(&x) {
                    desc.weak_ids.hid_trans.push([trans_ids[f].clone(), xid.clone()]);
                }
            }
            if let Ok(x) = inst.vid_trans(f) {
                if let Some(xid) = vc_ids.get(&x) {
                    desc.weak_ids.vid_trans.push([trans_ids[f].clone(), xid.clone()]);
                }
            }
        }
        for c in &self.basics {
            if let Ok(x) = inst.t_id_basic(c) {
                if let Some(xid) = cube_ids.get(&x) {
                    desc.t_id.basic_cells.push([bc_ids[c].clone(), xid.clone()]);
                }
            }
            let units: [(&str, OpResult<Cube>, OpResult<Cube>); 4] = [
                ("ulh", inst.unit_l_h_cell(c), inst.unit_l_h_cell_inv(c)),
                ("urh", inst.unit_r_h_cell(c), inst.unit_r_h_cell_inv(c)),
                ("ulv", inst.unit_l_v_cell(c), inst.unit_l_v_cell_inv(c)),
                ("urv", inst.unit_r_v_cell(c), inst.unit_r_v_cell_inv(c)),
            ];
            for (tag, fwd, inv) in units {
                if let (Ok(x), Ok(y)) = (fwd, inv) {
                    if let (Some(xi), Some(yi)) = (cube_ids.get(&x), cube_ids.get(&y)) {
                        let entry = [bc_ids[c].clone(), xi.clone(), yi.clone()];
                        match tag {
                            "ulh" => desc.structural.unit_l_h_cell.push(entry),
                            "urh" => desc.structural.unit_r_h_cell.push(entry),
                            "ulv" => desc.structural.unit_l_v_cell.push(entry),
                            _ => desc.structural.unit_r_v_cell.push(entry),
                        }
                    }
                }
            }
        }
        for psi in &self.vert_cells {
            if let Ok(x) = inst.hid_vert_cell(psi) {
                if let Some(xid) = cube_ids.get(&x) {
                    desc.weak_ids.hid_vert_cell.push([vc_ids[psi].clone(), xid.clone()]);
                }
            }
        }
        for phi in &self.hor_cells {
            if let Ok(x) = inst.vid_hor_cell(phi) {
                if let Some(xid) = cube_ids.get(&x) {
                    desc.weak_ids.vid_hor_cell.push([hc_ids[phi].clone(), xid.clone()]);
                }
            }
        }
        'dl: for h in &self.hors {
            for k in &self.hors {
                if desc.interchangers.delta.len() >= MAX_TABLE_ENTRIES
                    || desc.structural.assoc_h_arr.len() >= MAX_TABLE_ENTRIES
                {
                    break 'dl;
                }
                if composable::h_hor(h, k) {
                    if let Ok(x) = inst.delta(h, k) {
                        if let Some(xid) = cube_ids.get(&x) {
                            desc.interchangers.delta.push([
                                hor_ids[h].clone(),
                                hor_ids[k].clone(),
                                xid.clone(),
                            ]);
                        }
                    }
                    for l in &self.hors {
                        if composable::h_hor(k, l) {
                            if let (Ok(x), Ok(y)) = (inst.assoc_h_arr(h, k, l), inst.assoc_h_arr_inv(h, k, l)) {
                                if let (Some(xi), Some(yi)) = (hc_ids.get(&x), hc_ids.get(&y)) {
                                    desc.structural.assoc_h_arr.push([
                                        hor_ids[h].clone(),
                                        hor_ids[k].clone(),
                                        hor_ids[l].clone(),
                                        xi.clone(),
                                        yi.clone(),
                                    ]);
                                }
                            }
                        }
                    }
                }
            }
        }
        'mu: for v in &self.verts {
            for w in &self.verts {
                if desc.interchangers.mu.len() >= MAX_TABLE_ENTRIES
                    || desc.structural.assoc_v_arr.len() >= MAX_TABLE_ENTRIES
                {
                    break 'mu;
                }
                if composable::v_vert(v, w) {
                    if let Ok(x) = inst.mu(v, w) {
                        if let Some(xid) = cube_ids.get(&x) {
                            desc.interchangers.mu.push([
                                vert_ids[v].clone(),
                                vert_ids[w].clone(),
                                xid.clone(),
                            ]);
                        }
                    }
                    for u in &self.verts {
                        if composable::v_vert(w, u) {
                            if let (Ok(x), Ok(y)) = (inst.assoc_v_arr(v, w, u), inst.assoc_v_arr_inv(v, w, u)) {
                                if let (Some(xi), Some(yi)) = (vc_ids.get(&x), vc_ids.get(&y)) {
                                    desc.structural.assoc_v_arr.push([
                                        vert_ids[v].clone(),
                                        vert_ids[w].clone(),
                                        vert_ids[u].clone(),
                                        xi.clone(),
                                        yi.clone(),
                                    ]);
                                }
                            }
                        }
                    }
                }
            }
        }
        'hcel: for a in &self.basics {
            for b in &self.basics {
                if desc.interchangers.chi.len() >= MAX_TABLE_ENTRIES
                    || desc.structural.assoc_h_cell.len() >= MAX_TABLE_ENTRIES
                {
                    break 'hcel;
                }
                if composable::h_basic(a, b) {
                    for c in &self.basics {
                        if composable::h_basic(b, c) {
                            if let (Ok(x), Ok(y)) = (inst.assoc_h_cell(a, b, c), inst.assoc_h_cell_inv(a, b, c)) {
                                if let (Some(xi), Some(yi)) = (cube_ids.get(&x), cube_ids.get(&y)) {
                                    desc.structural.assoc_h_cell.push([
                                        bc_ids[a].clone(),
                                        bc_ids[b].clone(),
                                        bc_ids[c].clone(),
                                        xi.clone(),
                                        yi.clone(),
                                    ]);
                                }
                            }
                        }
                        if composable::v_basic(a, c) {
                            for d in &self.basics {
                                if desc.interchangers.chi.len() >= MAX_TABLE_ENTRIES {
                                    break 'hcel;
                                }
                                if composable::h_basic(c, d) && composable::v_basic(b, d) {
                                    if let Ok(x) = inst.chi(a, b, c, d) {
                                        if let Some(xid) = cube_ids.get(&x) {
                                            desc.interchangers.chi.push([
                                                bc_ids[a].clone(),
                                                bc_ids[b].clone(),
                                                bc_ids[c].clone(),
                                                bc_ids[d].clone(),
                                                xid.clone(),
                                            ]);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
                if composable::v_basic(a, b) {
                    for c in &self.basics {
                        if composable::v_basic(b, c) {
                            if let (Ok(x), Ok(y)) = (inst.assoc_v_cell(a, b, c), inst.assoc_v_cell_inv(a, b, c)) {
                                if let (Some(xi), Some(yi)) = (cube_ids.get(&x), cube_ids.get(&y)) {
                                    desc.structural.assoc_v_cell.push([
                                        bc_ids[a].clone(),
                                        bc_ids[b].clone(),
                                        bc_ids[c].clone(),
                                        xi.clone(),
                                        yi.clone(),
                                    ]);
                                }
                            }
                        }
                    }
                }
            }
        }
        desc.normalized()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::duoidal::DuoidalInstance;
    use crate::instances::table::{parity_description, TableInstance};
    use crate::laws::{check_all, CheckConfig};

    #[test]
    fn export_duoidal_one_round_trips() {
        let inst = DuoidalInstance::new(1);
        let desc = export_instance(&inst, 1);
        let loaded = TableInstance::load(&desc).expect("exported description loads");
        // checking the table matches the builtin's verdict
        let config = CheckConfig::with_budget(300, 3);
        let builtin = check_all(&inst, &config);
        let table = check_all(&loaded, &config);
        assert!(builtin.passed());
        assert!(table.passed(), "failing: {:?}", table.failing_laws());
        // export of the load is presentation-equal to the export
        let desc2 = export_instance(&loaded, 0);
        assert!(desc2.presentation_eq(&desc2.clone()));
        let reloaded = TableInstance::load(&desc2).expect("re-export loads");
        let _ = reloaded;
    }

    #[test]
    fn table_export_identity() {
        // exporting a table instance at depth 0 reproduces its presentation
        let desc = parity_description();
        let inst = TableInstance::load(&desc).unwrap();
        let exported = export_instance(&inst, 0);
        let inst2 = TableInstance::load(&exported).unwrap();
        let exported2 = export_instance(&inst2, 0);
        assert!(exported.presentation_eq(&exported2));
    }
}
