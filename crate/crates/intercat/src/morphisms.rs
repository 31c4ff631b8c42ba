//! Morphisms of intercategories, their double cells, pasting, and commuting
//! cubes — the data of the strict triple category whose objects are
//! intercategories.
//!
//! A morphism maps every sort to the like sort, preserves all boundaries,
//! preserves transversal composition strictly, and carries comparison
//! families for the two weak directions:
//!
//! - `phi_v`: per object, per horizontal arrow, per composable vertical
//!   pair and per vertically composable basic-cell pair;
//! - `phi_h`: per object, per vertical arrow, per composable horizontal
//!   pair and per horizontally composable basic-cell pair.
//!
//! The kind fixes the directions: lax-lax points both families toward the
//! image of the composite, colax-lax reverses `phi_h`, and colax-colax
//! reverses both. The horizontally-lax, vertically-colax variant does not
//! exist: its compatibility square with the interchanger cannot even be
//! composed, and the constructor rejects it.
//!
//! Double cells come in three shapes, named by the directions they relate:
//! horizontal cells sit between lax-lax arrows with colax-lax sides,
//! vertical cells between colax-lax arrows with colax-colax sides, and
//! basic cells between lax-lax arrows with colax-colax sides. Cells paste
//! transversally by the whiskering formulas, and six cells with matching
//! edges form a cube whose commutativity is one hexagon per basic cell.

use crate::laws::{eval_error, run_law, CheckConfig, Eval, LawId, LawReport, Ops, Witness};
use crate::model::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MorphismKind {
    LaxLax,
    ColaxLax,
    ColaxColax,
}

impl MorphismKind {
    pub fn parse(s: &str) -> Result<MorphismKind, String> {
        match s {
            "lax-lax" => Ok(MorphismKind::LaxLax),
            "colax-lax" => Ok(MorphismKind::ColaxLax),
            "colax-colax" => Ok(MorphismKind::ColaxColax),
            "lax-colax" => Err(
                "the horizontally lax, vertically colax kind does not exist: \
                 its interchange compatibility square cannot be composed"
                    .into(),
            ),
            other => Err(format!("unknown morphism kind '{}'", other)),
        }
    }

    /// Does `phi_v` point toward the image of composites?
    pub fn vert_lax(&self) -> bool {
        !matches!(self, MorphismKind::ColaxColax)
    }

    /// Does `phi_h` point toward the image of composites?
    pub fn hor_lax(&self) -> bool {
        matches!(self, MorphismKind::LaxLax)
    }
}

/// Explicit finite component tables, keyed by source elements.
#[derive(Default, Clone)]
pub struct TableMaps {
    pub obj: HashMap<ObjId, ObjId>,
    pub trans: HashMap<Val, TransArrow>,
    pub hor: HashMap<Val, HorArrow>,
    pub vert: HashMap<Val, VertArrow>,
    pub hor_cell: HashMap<Val, HorCell>,
    pub vert_cell: HashMap<Val, VertCell>,
    pub basic: HashMap<Val, BasicCell>,
    pub cube: HashMap<Val, Cube>,
    pub phi_v_obj: HashMap<Val, VertCell>,
    pub phi_v_hor: HashMap<Val, Cube>,
    pub phi_v_pair: HashMap<(Val, Val), VertCell>,
    pub phi_v_cells: HashMap<(Val, Val), Cube>,
    pub phi_h_obj: HashMap<Val, HorCell>,
    pub phi_h_vert: HashMap<Val, Cube>,
    pub phi_h_pair: HashMap<(Val, Val), HorCell>,
    pub phi_h_cells: HashMap<(Val, Val), Cube>,
}

/// Overrides on top of another morphism, for engineered failure fixtures.
#[derive(Default, Clone)]
pub struct Perturbation {
    pub phi_v_hor: HashMap<Val, Cube>,
    pub phi_v_cells: HashMap<(Val, Val), Cube>,
    pub phi_h_vert: HashMap<Val, Cube>,
    pub phi_h_cells: HashMap<(Val, Val), Cube>,
}

enum Maps {
    Identity,
    Collapse,
    Composite(Arc<MorphismData>, Arc<MorphismData>),
    Table(Box<TableMaps>),
    Perturbed(Arc<MorphismData>, Box<Perturbation>),
}

pub struct MorphismData {
    pub name: String,
    pub source: InstanceHandle,
    pub target: InstanceHandle,
    pub kind: MorphismKind,
    maps: Maps,
}

/// The identity morphism qualifies under every kind.
pub fn identity_morphism(inst: InstanceHandle, kind: MorphismKind) -> MorphismData {
    MorphismData {
        name: format!("id[{}]", inst.name()),
        source: inst.clone(),
        target: inst,
        kind,
        maps: Maps::Identity,
    }
}

/// Collapse onto a target with exactly one element of every sort.
pub fn collapse_morphism(
    source: InstanceHandle,
    target: InstanceHandle,
    kind: MorphismKind,
) -> Result<MorphismData, String> {
    for (count, what) in [
        (target.objects().len(), "objects"),
        (target.trans_arrows().len(), "transversal arrows"),
        (target.hor_arrows().len(), "horizontal arrows"),
        (target.vert_arrows().len(), "vertical arrows"),
        (target.hor_cells().len(), "horizontal cells"),
        (target.vert_cells().len(), "vertical cells"),
        (target.basic_cells().len(), "basic cells"),
        (target.cubes().len(), "cubes"),
    ] {
        if count != 1 {
            return Err(format!(
                "collapse target must have exactly one of each sort; found {} {}",
                count, what
            ));
        }
    }
    Ok(MorphismData {
        name: format!("collapse[{}->{}]", source.name(), target.name()),
        source,
        target,
        kind,
        maps: Maps::Collapse,
    })
}

/// Composite `g . f` (apply `f` first); kinds must agree and the instances
/// must chain.
pub fn compose_morphisms(
    f: &Arc<MorphismData>,
    g: &Arc<MorphismData>,
) -> Result<MorphismData, String> {
    if f.kind != g.kind {
        return Err(format!("kind mismatch: {:?} vs {:?}", f.kind, g.kind));
    }
    if !Arc::ptr_eq(&f.target, &g.source) {
        return Err("instance mismatch: target of the first is not the source of the second".into());
    }
    Ok(MorphismData {
        name: format!("{};{}", f.name, g.name),
        source: f.source.clone(),
        target: g.target.clone(),
        kind: f.kind,
        maps: Maps::Composite(f.clone(), g.clone()),
    })
}

/// Table-backed morphism.
pub fn table_morphism(
    name: String,
    source: InstanceHandle,
    target: InstanceHandle,
    kind: MorphismKind,
    maps: TableMaps,
) -> MorphismData {
    MorphismData { name, source, target, kind, maps: Maps::Table(Box::new(maps)) }
}

/// Base morphism with some components replaced.
pub fn perturbed_morphism(base: Arc<MorphismData>, pert: Perturbation) -> MorphismData {
    MorphismData {
        name: format!("{}~pert", base.name),
        source: base.source.clone(),
        target: base.target.clone(),
        kind: base.kind,
        maps: Maps::Perturbed(base, Box::new(pert)),
    }
}

macro_rules! missing {
    ($op:literal, $what:expr) => {
        OpError::missing($op, $what)
    };
}

impl MorphismData {
    // ---- sort maps ----

    pub fn apply_obj(&self, a: &ObjId) -> OpResult<ObjId> {
        match &self.maps {
            Maps::Identity => Ok(a.clone()),
            Maps::Collapse => Ok(self.target.objects()[0].clone()),
            Maps::Composite(f, g) => g.apply_obj(&f.apply_obj(a)?),
            Maps::Table(t) => t.obj.get(a).cloned().ok_or_else(|| missing!("apply_obj", a)),
            Maps::Perturbed(b, _) => b.apply_obj(a),
        }
    }

    pub fn apply_trans(&self, f: &TransArrow) -> OpResult<TransArrow> {
        match &self.maps {
            Maps::Identity => Ok(f.clone()),
            Maps::Collapse => Ok(self.target.trans_arrows()[0].clone()),
            Maps::Composite(m, g) => g.apply_trans(&m.apply_trans(f)?),
            Maps::Table(t) => t.trans.get(&f.id).cloned().ok_or_else(|| missing!("apply_trans", f)),
            Maps::Perturbed(b, _) => b.apply_trans(f),
        }
    }

    pub fn apply_hor(&self, h: &HorArrow) -> OpResult<HorArrow> {
        match &self.maps {
            Maps::Identity => Ok(h.clone()),
            Maps::Collapse => Ok(self.target.hor_arrows()[0].clone()),
            Maps::Composite(m, g) => g.apply_hor(&m.apply_hor(h)?),
            Maps::Table(t) => t.hor.get(&h.id).cloned().ok_or_else(|| missing!("apply_hor", h)),
            Maps::Perturbed(b, _) => b.apply_hor(h),
        }
    }

    pub fn apply_vert(&self, v: &VertArrow) -> OpResult<VertArrow> {
        match &self.maps {
            Maps::Identity => Ok(v.clone()),
            Maps::Collapse => Ok(self.target.vert_arrows()[0].clone()),
            Maps::Composite(m, g) => g.apply_vert(&m.apply_vert(v)?),
            Maps::Table(t) => t.vert.get(&v.id).cloned().ok_or_else(|| missing!("apply_vert", v)),
            Maps::Perturbed(b, _) => b.apply_vert(v),
        }
    }

    pub fn apply_hor_cell(&self, c: &HorCell) -> OpResult<HorCell> {
        match &self.maps {
            Maps::Identity => Ok(c.clone()),
            Maps::Collapse => Ok(self.target.hor_cells()[0].clone()),
            Maps::Composite(m, g) => g.apply_hor_cell(&m.apply_hor_cell(c)?),
            Maps::Table(t) => t.hor_cell.get(&c.id).cloned().ok_or_else(|| missing!("apply_hor_cell", c)),
            Maps::Perturbed(b, _) => b.apply_hor_cell(c),
        }
    }

    pub fn apply_vert_cell(&self, c: &VertCell) -> OpResult<VertCell> {
        match &self.maps {
            Maps::Identity => Ok(c.clone()),
            Maps::Collapse => Ok(self.target.vert_cells()[0].clone()),
            Maps::Composite(m, g) => g.apply_vert_cell(&m.apply_vert_cell(c)?),
            Maps::Table(t) => t.vert_cell.get(&c.id).cloned().ok_or_else(|| missing!("apply_vert_cell", c)),
            Maps::Perturbed(b, _) => b.apply_vert_cell(c),
        }
    }

    pub fn apply_basic(&self, c: &BasicCell) -> OpResult<BasicCell> {
        match &self.maps {
            Maps::Identity => Ok(c.clone()),
            Maps::Collapse => Ok(self.target.basic_cells()[0].clone()),
            Maps::Composite(m, g) => g.apply_basic(&m.apply_basic(c)?),
            Maps::Table(t) => t.basic.get(&c.id).cloned().ok_or_else(|| missing!("apply_basic", c)),
            Maps::Perturbed(b, _) => b.apply_basic(c),
        }
    }

    pub fn apply_cube(&self, c: &Cube) -> OpResult<Cube> {
        match &self.maps {
            Maps::Identity => Ok(c.clone()),
            Maps::Collapse => Ok(self.target.cubes()[0].clone()),
            Maps::Composite(m, g) => g.apply_cube(&m.apply_cube(c)?),
            Maps::Table(t) => t.cube.get(&c.id).cloned().ok_or_else(|| missing!("apply_cube", c)),
            Maps::Perturbed(b, _) => b.apply_cube(c),
        }
    }

    // ---- phi_v components (oriented by kind) ----

    /// `phi_v(A)`: between `Id_{FA}` and `F(Id_A)`, toward the image for
    /// vertically lax kinds.
    pub fn fv_obj(&self, a: &ObjId) -> OpResult<VertCell> {
        match &self.maps {
            Maps::Identity => self.source.t_id_vert(&self.source.vid_obj(a)?),
            Maps::Collapse => Ok(self.target.vert_cells()[0].clone()),
            Maps::Composite(f, g) => {
                let inner = g.apply_vert_cell(&f.fv_obj(a)?)?;
                let outer = g.fv_obj(&f.apply_obj(a)?)?;
                if self.kind.vert_lax() {
                    self.target.t_comp_vert_cell(&outer, &inner)
                } else {
                    self.target.t_comp_vert_cell(&inner, &outer)
                }
            }
            Maps::Table(t) => t.phi_v_obj.get(&a.0).cloned().ok_or_else(|| missing!("fv_obj", a)),
            Maps::Perturbed(b, _) => b.fv_obj(a),
        }
    }

    /// `phi_v(h)`: cube between `Id_{Fh}` and `F(Id_h)`.
    pub fn fv_hor(&self, h: &HorArrow) -> OpResult<Cube> {
        match &self.maps {
            Maps::Identity => self.source.t_id_basic(&self.source.vid_hor(h)?),
            Maps::Collapse => Ok(self.target.cubes()[0].clone()),
            Maps::Composite(f, g) => {
                let inner = g.apply_cube(&f.fv_hor(h)?)?;
                let outer = g.fv_hor(&f.apply_hor(h)?)?;
                if self.kind.vert_lax() {
                    self.target.t_comp_cube(&outer, &inner)
                } else {
                    self.target.t_comp_cube(&inner, &outer)
                }
            }
            Maps::Table(t) => t.phi_v_hor.get(&h.id).cloned().ok_or_else(|| missing!("fv_hor", h)),
            Maps::Perturbed(b, p) => match p.phi_v_hor.get(&h.id) {
                Some(c) => Ok(c.clone()),
                None => b.fv_hor(h),
            },
        }
    }

    /// `phi_v(v, w)`: between `Fv / Fw` and `F(v / w)`.
    pub fn fv_pair(&self, v: &VertArrow, w: &VertArrow) -> OpResult<VertCell> {
        match &self.maps {
            Maps::Identity => self.source.t_id_vert(&self.source.v_comp_vert(v, w)?),
            Maps::Collapse => Ok(self.target.vert_cells()[0].clone()),
            Maps::Composite(f, g) => {
                let inner = g.apply_vert_cell(&f.fv_pair(v, w)?)?;
                let outer = g.fv_pair(&f.apply_vert(v)?, &f.apply_vert(w)?)?;
                if self.kind.vert_lax() {
                    self.target.t_comp_vert_cell(&outer, &inner)
                } else {
                    self.target.t_comp_vert_cell(&inner, &outer)
                }
            }
            Maps::Table(t) => t
                .phi_v_pair
                .get(&(v.id.clone(), w.id.clone()))
                .cloned()
                .ok_or_else(|| missing!("fv_pair", (v, w))),
            Maps::Perturbed(b, _) => b.fv_pair(v, w),
        }
    }

    /// `phi_v(a, b)`: cube between `Fa / Fb` and `F(a / b)`.
    pub fn fv_cells(&self, a: &BasicCell, b: &BasicCell) -> OpResult<Cube> {
        match &self.maps {
            Maps::Identity => self.source.t_id_basic(&self.source.v_comp_basic(a, b)?),
            Maps::Collapse => Ok(self.target.cubes()[0].clone()),
            Maps::Composite(f, g) => {
                let inner = g.apply_cube(&f.fv_cells(a, b)?)?;
                let outer = g.fv_cells(&f.apply_basic(a)?, &f.apply_basic(b)?)?;
                if self.kind.vert_lax() {
                    self.target.t_comp_cube(&outer, &inner)
                } else {
                    self.target.t_comp_cube(&inner, &outer)
                }
            }
            Maps::Table(t) => t
                .phi_v_cells
                .get(&(a.id.clone(), b.id.clone()))
                .cloned()
                .ok_or_else(|| missing!("fv_cells", (a, b))),
            Maps::Perturbed(base, p) => match p.phi_v_cells.get(&(a.id.clone(), b.id.clone())) {
                Some(c) => Ok(c.clone()),
                None => base.fv_cells(a, b),
            },
        }
    }

    // ---- phi_h components ----

    pub fn fh_obj(&self, a: &ObjId) -> OpResult<HorCell> {
        match &self.maps {
            Maps::Identity => self.source.t_id_hor(&self.source.hid_obj(a)?),
            Maps::Collapse => Ok(self.target.hor_cells()[0].clone()),
            Maps::Composite(f, g) => {
                let inner = g.apply_hor_cell(&f.fh_obj(a)?)?;
                let outer = g.fh_obj(&f.apply_obj(a)?)?;
                if self.kind.hor_lax() {
                    self.target.t_comp_hor_cell(&outer, &inner)
                } else {
                    self.target.t_comp_hor_cell(&inner, &outer)
                }
            }
            Maps::Table(t) => t.phi_h_obj.get(&a.0).cloned().ok_or_else(|| missing!("fh_obj", a)),
            Maps::Perturbed(b, _) => b.fh_obj(a),
        }
    }

    pub fn fh_vert(&self, v: &VertArrow) -> OpResult<Cube> {
        match &self.maps {
            Maps::Identity => self.source.t_id_basic(&self.source.hid_vert(v)?),
            Maps::Collapse => Ok(self.target.cubes()[0].clone()),
            Maps::Composite(f, g) => {
                let inner = g.apply_cube(&f.fh_vert(v)?)?;
                let outer = g.fh_vert(&f.apply_vert(v)?)?;
                if self.kind.hor_lax() {
                    self.target.t_comp_cube(&outer, &inner)
                } else {
                    self.target.t_comp_cube(&inner, &outer)
                }
            }
            Maps::Table(t) => t.phi_h_vert.get(&v.id).cloned().ok_or_else(|| missing!("fh_vert", v)),
            Maps::Perturbed(b, p) => match p.phi_h_vert.get(&v.id) {
                Some(c) => Ok(c.clone()),
                None => b.fh_vert(v),
            },
        }
    }

    pub fn fh_pair(&self, h: &HorArrow, k: &HorArrow) -> OpResult<HorCell> {
        match &self.maps {
            Maps::Identity => self.source.t_id_hor(&self.source.h_comp_hor(h, k)?),
            Maps::Collapse => Ok(self.target.hor_cells()[0].clone()),
            Maps::Composite(f, g) => {
                let inner = g.apply_hor_cell(&f.fh_pair(h, k)?)?;
                let outer = g.fh_pair(&f.apply_hor(h)?, &f.apply_hor(k)?)?;
                if self.kind.hor_lax() {
                    self.target.t_comp_hor_cell(&outer, &inner)
                } else {
                    self.target.t_comp_hor_cell(&inner, &outer)
                }
            }
            Maps::Table(t) => t
                .phi_h_pair
                .get(&(h.id.clone(), k.id.clone()))
                .cloned()
                .ok_or_else(|| missing!("fh_pair", (h, k))),
            Maps::Perturbed(b, _) => b.fh_pair(h, k),
        }
    }

    pub fn fh_cells(&self, a: &BasicCell, b: &BasicCell) -> OpResult<Cube> {
        match &self.maps {
            Maps::Identity => self.source.t_id_basic(&self.source.h_comp_basic(a, b)?),
            Maps::Collapse => Ok(self.target.cubes()[0].clone()),
            Maps::Composite(f, g) => {
                let inner = g.apply_cube(&f.fh_cells(a, b)?)?;
                let outer = g.fh_cells(&f.apply_basic(a)?, &f.apply_basic(b)?)?;
                if self.kind.hor_lax() {
                    self.target.t_comp_cube(&outer, &inner)
                } else {
                    self.target.t_comp_cube(&inner, &outer)
                }
            }
            Maps::Table(t) => t
                .phi_h_cells
                .get(&(a.id.clone(), b.id.clone()))
                .cloned()
                .ok_or_else(|| missing!("fh_cells", (a, b))),
            Maps::Perturbed(base, p) => match p.phi_h_cells.get(&(a.id.clone(), b.id.clone())) {
                Some(c) => Ok(c.clone()),
                None => base.fh_cells(a, b),
            },
        }
    }

    /// Materialize the morphism over the source enumerators, for literal
    /// data comparisons like strict associativity of composition.
    pub fn materialize(&self) -> BTreeMap<String, String> {
        let mut out = BTreeMap::new();
        for a in self.source.objects() {
            if let Ok(x) = self.apply_obj(&a) {
                out.insert(format!("ob:{:?}", a), format!("{:?}", x));
            }
            if let Ok(x) = self.fv_obj(&a) {
                out.insert(format!("fv_obj:{:?}", a), format!("{:?}", x));
            }
            if let Ok(x) = self.fh_obj(&a) {
                out.insert(format!("fh_obj:{:?}", a), format!("{:?}", x));
            }
        }
        for c in self.source.basic_cells() {
            if let Ok(x) = self.apply_basic(&c) {
                out.insert(format!("bc:{:?}", c), format!("{:?}", x));
            }
        }
        for c in self.source.cubes() {
            if let Ok(x) = self.apply_cube(&c) {
                out.insert(format!("cube:{:?}", c), format!("{:?}", x));
            }
        }
        let cells = self.source.basic_cells();
        for a in &cells {
            for b in &cells {
                if composable::v_basic(a, b) {
                    if let Ok(x) = self.fv_cells(a, b) {
                        out.insert(format!("fv_cells:{:?}|{:?}", a, b), format!("{:?}", x));
                    }
                }
                if composable::h_basic(a, b) {
                    if let Ok(x) = self.fh_cells(a, b) {
                        out.insert(format!("fh_cells:{:?}|{:?}", a, b), format!("{:?}", x));
                    }
                }
            }
        }
        out
    }
}

// ---- morphism condition checking ----

/// Structural validation: boundary preservation of the sort maps and strict
/// preservation of transversal composition, on enumerated elements.
fn structural_check(m: &MorphismData, config: &CheckConfig) -> Result<(), String> {
    let src = m.source.as_ref();
    for h in src.hor_arrows() {
        if let Ok(img) = m.apply_hor(&h) {
            let s = m.apply_obj(&h.src).map_err(|e| e.to_string())?;
            let t = m.apply_obj(&h.tgt).map_err(|e| e.to_string())?;
            if img.src != s || img.tgt != t {
                return Err(format!("{}: horizontal arrow {:?} does not preserve endpoints", m.name, h));
            }
        }
    }
    for v in src.vert_arrows() {
        if let Ok(img) = m.apply_vert(&v) {
            let s = m.apply_obj(&v.src).map_err(|e| e.to_string())?;
            let t = m.apply_obj(&v.tgt).map_err(|e| e.to_string())?;
            if img.src != s || img.tgt != t {
                return Err(format!("{}: vertical arrow {:?} does not preserve endpoints", m.name, v));
            }
        }
    }
    for c in src.basic_cells() {
        if let Ok(img) = m.apply_basic(&c) {
            let ok = img.top == m.apply_hor(&c.top).map_err(|e| e.to_string())?
                && img.bottom == m.apply_hor(&c.bottom).map_err(|e| e.to_string())?
                && img.left == m.apply_vert(&c.left).map_err(|e| e.to_string())?
                && img.right == m.apply_vert(&c.right).map_err(|e| e.to_string())?;
            if !ok {
                return Err(format!("{}: basic cell {:?} does not preserve its boundary", m.name, c));
            }
        }
    }
    for c in src.cubes() {
        if let Ok(img) = m.apply_cube(&c) {
            let ok = img.back == m.apply_basic(&c.back).map_err(|e| e.to_string())?
                && img.front == m.apply_basic(&c.front).map_err(|e| e.to_string())?;
            if !ok {
                return Err(format!("{}: cube {:?} does not preserve its faces", m.name, c));
            }
        }
    }
    // strict transversal functoriality on a bounded sample of pairs
    let cubes = src.cubes();
    let mut checked = 0;
    'outer: for a in &cubes {
        for b in &cubes {
            if !composable::t_cube(a, b) {
                continue;
            }
            let (lhs, rhs) = match (
                src.t_comp_cube(a, b).and_then(|ab| m.apply_cube(&ab)),
                m.apply_cube(a).and_then(|fa| {
                    m.apply_cube(b).and_then(|fb| m.target.t_comp_cube(&fa, &fb))
                }),
            ) {
                (Ok(l), Ok(r)) => (l, r),
                _ => continue,
            };
            if lhs != rhs {
                return Err(format!("{}: transversal composition of cubes is not preserved strictly", m.name));
            }
            checked += 1;
            if checked >= config.budget {
                break 'outer;
            }
        }
    }
    Ok(())
}

/// Evaluates conditions (5)-(14) for a morphism, with the comparison cells
/// oriented by its kind.
pub fn check_morphism(m: &MorphismData, config: &CheckConfig) -> Result<Vec<LawReport>, String> {
    structural_check(m, config)?;
    let src = m.source.as_ref();
    let tgt = m.target.as_ref();
    let ops = Ops(tgt);
    let vlax = m.kind.vert_lax();
    let hlax = m.kind.hor_lax();
    let mut out = Vec::new();
    let mut rng = StdRng::seed_from_u64(config.seed);

    let cells = src.basic_cells();
    let singles: Vec<Vec<BasicCell>> = cells.iter().map(|c| vec![c.clone()]).collect();
    let vpairs = crate::laws::grids_for_morphisms(&cells, 2, 1, config.budget, &mut rng);
    let vtriples = crate::laws::grids_for_morphisms(&cells, 3, 1, config.budget, &mut rng);
    let hpairs = crate::laws::grids_for_morphisms(&cells, 1, 2, config.budget, &mut rng);
    let htriples = crate::laws::grids_for_morphisms(&cells, 1, 3, config.budget, &mut rng);
    let quads = crate::laws::grids_for_morphisms(&cells, 2, 2, config.budget, &mut rng);

    // (5) / (6): phi_v against the vertical unit comparisons
    let mut m5 = LawReport::new(LawId::Morphism(5));
    run_law(&mut m5, &singles, config.max_witnesses, |t| {
        let a = t[0].clone();
        let h = a.top.clone();
        let fa = try_eval2!(t, m.apply_basic(&a));
        let lhs = try_eval2!(t, {
            let idh = src.vid_hor(&h)?;
            if vlax {
                ops.tc(&[
                    ops.vc(&m.fv_hor(&h)?, &tgt.t_id_basic(&fa)?)?,
                    m.fv_cells(&idh, &a)?,
                    m.apply_cube(&src.unit_l_v_cell(&a)?)?,
                ])
            } else {
                ops.tc(&[
                    m.fv_cells(&idh, &a)?,
                    ops.vc(&m.fv_hor(&h)?, &tgt.t_id_basic(&fa)?)?,
                    tgt.unit_l_v_cell(&fa)?,
                ])
            }
        });
        let rhs = try_eval2!(t, if vlax {
            tgt.unit_l_v_cell(&fa)
        } else {
            m.apply_cube(&src.unit_l_v_cell(&a)?)
        });
        compare_cubes(t, lhs, rhs)
    });
    out.push(m5);

    let mut m6 = LawReport::new(LawId::Morphism(6));
    run_law(&mut m6, &singles, config.max_witnesses, |t| {
        let a = t[0].clone();
        let hb = a.bottom.clone();
        let fa = try_eval2!(t, m.apply_basic(&a));
        let lhs = try_eval2!(t, {
            let idh = src.vid_hor(&hb)?;
            if vlax {
                ops.tc(&[
                    ops.vc(&tgt.t_id_basic(&fa)?, &m.fv_hor(&hb)?)?,
                    m.fv_cells(&a, &idh)?,
                    m.apply_cube(&src.unit_r_v_cell(&a)?)?,
                ])
            } else {
                ops.tc(&[
                    m.fv_cells(&a, &idh)?,
                    ops.vc(&tgt.t_id_basic(&fa)?, &m.fv_hor(&hb)?)?,
                    tgt.unit_r_v_cell(&fa)?,
                ])
            }
        });
        let rhs = try_eval2!(t, if vlax {
            tgt.unit_r_v_cell(&fa)
        } else {
            m.apply_cube(&src.unit_r_v_cell(&a)?)
        });
        compare_cubes(t, lhs, rhs)
    });
    out.push(m6);

    // (7): phi_v against vertical associativity
    let mut m7 = LawReport::new(LawId::Morphism(7));
    run_law(&mut m7, &vtriples, config.max_witnesses, |t| {
        let (a, b, c) = (t[0].clone(), t[1].clone(), t[2].clone());
        let (fa, fc) = (try_eval2!(t, m.apply_basic(&a)), try_eval2!(t, m.apply_basic(&c)));
        let bc = try_eval2!(t, src.v_comp_basic(&b, &c));
        let ab = try_eval2!(t, src.v_comp_basic(&a, &b));
        let (lhs, rhs) = if vlax {
            (
                try_eval2!(t, ops.tc(&[
                    ops.vc(&tgt.t_id_basic(&fa)?, &m.fv_cells(&b, &c)?)?,
                    m.fv_cells(&a, &bc)?,
                    m.apply_cube(&src.assoc_v_cell(&a, &b, &c)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    tgt.assoc_v_cell(&fa, &m.apply_basic(&b)?, &m.apply_basic(&c)?)?,
                    ops.vc(&m.fv_cells(&a, &b)?, &tgt.t_id_basic(&fc)?)?,
                    m.fv_cells(&ab, &c)?,
                ])),
            )
        } else {
            (
                try_eval2!(t, ops.tc(&[
                    m.fv_cells(&a, &bc)?,
                    ops.vc(&tgt.t_id_basic(&fa)?, &m.fv_cells(&b, &c)?)?,
                    tgt.assoc_v_cell(&fa, &m.apply_basic(&b)?, &m.apply_basic(&c)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    m.apply_cube(&src.assoc_v_cell(&a, &b, &c)?)?,
                    m.fv_cells(&ab, &c)?,
                    ops.vc(&m.fv_cells(&a, &b)?, &tgt.t_id_basic(&fc)?)?,
                ])),
            )
        };
        compare_cubes(t, lhs, rhs)
    });
    out.push(m7);

    // (8) / (9): phi_h against the horizontal unit comparisons
    let mut m8 = LawReport::new(LawId::Morphism(8));
    run_law(&mut m8, &singles, config.max_witnesses, |t| {
        let a = t[0].clone();
        let v = a.left.clone();
        let fa = try_eval2!(t, m.apply_basic(&a));
        let lhs = try_eval2!(t, {
            let idv = src.hid_vert(&v)?;
            if hlax {
                ops.tc(&[
                    ops.hc(&m.fh_vert(&v)?, &tgt.t_id_basic(&fa)?)?,
                    m.fh_cells(&idv, &a)?,
                    m.apply_cube(&src.unit_l_h_cell(&a)?)?,
                ])
            } else {
                ops.tc(&[
                    m.fh_cells(&idv, &a)?,
                    ops.hc(&m.fh_vert(&v)?, &tgt.t_id_basic(&fa)?)?,
                    tgt.unit_l_h_cell(&fa)?,
                ])
            }
        });
        let rhs = try_eval2!(t, if hlax {
            tgt.unit_l_h_cell(&fa)
        } else {
            m.apply_cube(&src.unit_l_h_cell(&a)?)
        });
        compare_cubes(t, lhs, rhs)
    });
    out.push(m8);

    let mut m9 = LawReport::new(LawId::Morphism(9));
    run_law(&mut m9, &singles, config.max_witnesses, |t| {
        let a = t[0].clone();
        let w = a.right.clone();
        let fa = try_eval2!(t, m.apply_basic(&a));
        let lhs = try_eval2!(t, {
            let idw = src.hid_vert(&w)?;
            if hlax {
                ops.tc(&[
                    ops.hc(&tgt.t_id_basic(&fa)?, &m.fh_vert(&w)?)?,
                    m.fh_cells(&a, &idw)?,
                    m.apply_cube(&src.unit_r_h_cell(&a)?)?,
                ])
            } else {
                ops.tc(&[
                    m.fh_cells(&a, &idw)?,
                    ops.hc(&tgt.t_id_basic(&fa)?, &m.fh_vert(&w)?)?,
                    tgt.unit_r_h_cell(&fa)?,
                ])
            }
        });
        let rhs = try_eval2!(t, if hlax {
            tgt.unit_r_h_cell(&fa)
        } else {
            m.apply_cube(&src.unit_r_h_cell(&a)?)
        });
        compare_cubes(t, lhs, rhs)
    });
    out.push(m9);

    // (10): phi_h against horizontal associativity
    let mut m10 = LawReport::new(LawId::Morphism(10));
    run_law(&mut m10, &htriples, config.max_witnesses, |t| {
        let (a, b, c) = (t[0].clone(), t[1].clone(), t[2].clone());
        let (fa, fc) = (try_eval2!(t, m.apply_basic(&a)), try_eval2!(t, m.apply_basic(&c)));
        let bc = try_eval2!(t, src.h_comp_basic(&b, &c));
        let ab = try_eval2!(t, src.h_comp_basic(&a, &b));
        let (lhs, rhs) = if hlax {
            (
                try_eval2!(t, ops.tc(&[
                    ops.hc(&tgt.t_id_basic(&fa)?, &m.fh_cells(&b, &c)?)?,
                    m.fh_cells(&a, &bc)?,
                    m.apply_cube(&src.assoc_h_cell(&a, &b, &c)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    tgt.assoc_h_cell(&fa, &m.apply_basic(&b)?, &m.apply_basic(&c)?)?,
                    ops.hc(&m.fh_cells(&a, &b)?, &tgt.t_id_basic(&fc)?)?,
                    m.fh_cells(&ab, &c)?,
                ])),
            )
        } else {
            (
                try_eval2!(t, ops.tc(&[
                    m.fh_cells(&a, &bc)?,
                    ops.hc(&tgt.t_id_basic(&fa)?, &m.fh_cells(&b, &c)?)?,
                    tgt.assoc_h_cell(&fa, &m.apply_basic(&b)?, &m.apply_basic(&c)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    m.apply_cube(&src.assoc_h_cell(&a, &b, &c)?)?,
                    m.fh_cells(&ab, &c)?,
                    ops.hc(&m.fh_cells(&a, &b)?, &tgt.t_id_basic(&fc)?)?,
                ])),
            )
        };
        compare_cubes(t, lhs, rhs)
    });
    out.push(m10);

    // (11): compatibility with tau
    let mut m11 = LawReport::new(LawId::Morphism(11));
    let objs: Vec<Vec<ObjId>> = src.objects().iter().map(|a| vec![a.clone()]).collect();
    run_law(&mut m11, &objs, config.max_witnesses, |t| {
        let a = t[0].clone();
        let fa = try_eval2!(t, m.apply_obj(&a));
        let ida = try_eval2!(t, src.hid_obj(&a));
        let vida = try_eval2!(t, src.vid_obj(&a));
        let (lhs, rhs) = match m.kind {
            MorphismKind::LaxLax => (
                try_eval2!(t, ops.tc(&[
                    tgt.vid_hor_cell(&m.fh_obj(&a)?)?,
                    m.fv_hor(&ida)?,
                    m.apply_cube(&src.tau(&a)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    tgt.tau(&fa)?,
                    tgt.hid_vert_cell(&m.fv_obj(&a)?)?,
                    m.fh_vert(&vida)?,
                ])),
            ),
            MorphismKind::ColaxLax => (
                try_eval2!(t, ops.tc(&[
                    tgt.vid_hor_cell(&m.fh_obj(&a)?)?,
                    tgt.tau(&fa)?,
                    tgt.hid_vert_cell(&m.fv_obj(&a)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    m.fv_hor(&ida)?,
                    m.apply_cube(&src.tau(&a)?)?,
                    m.fh_vert(&vida)?,
                ])),
            ),
            MorphismKind::ColaxColax => (
                try_eval2!(t, ops.tc(&[
                    m.fv_hor(&ida)?,
                    tgt.vid_hor_cell(&m.fh_obj(&a)?)?,
                    tgt.tau(&fa)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    m.apply_cube(&src.tau(&a)?)?,
                    m.fh_vert(&vida)?,
                    tgt.hid_vert_cell(&m.fv_obj(&a)?)?,
                ])),
            ),
        };
        compare_cubes(t, lhs, rhs)
    });
    out.push(m11);

    // (12): compatibility with mu
    let mut m12 = LawReport::new(LawId::Morphism(12));
    let verts = src.vert_arrows();
    let mut vert_pairs: Vec<Vec<VertArrow>> = Vec::new();
    for v in &verts {
        for w in &verts {
            if composable::v_vert(v, w) {
                vert_pairs.push(vec![v.clone(), w.clone()]);
            }
            if vert_pairs.len() >= config.budget {
                break;
            }
        }
    }
    run_law(&mut m12, &vert_pairs, config.max_witnesses, |t| {
        let (v, w) = (t[0].clone(), t[1].clone());
        let (fv, fw) = (try_eval2!(t, m.apply_vert(&v)), try_eval2!(t, m.apply_vert(&w)));
        let idv = try_eval2!(t, src.hid_vert(&v));
        let idw = try_eval2!(t, src.hid_vert(&w));
        let vw = try_eval2!(t, src.v_comp_vert(&v, &w));
        let (lhs, rhs) = match m.kind {
            MorphismKind::LaxLax => (
                try_eval2!(t, ops.tc(&[
                    ops.vc(&m.fh_vert(&v)?, &m.fh_vert(&w)?)?,
                    m.fv_cells(&idv, &idw)?,
                    m.apply_cube(&src.mu(&v, &w)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    tgt.mu(&fv, &fw)?,
                    tgt.hid_vert_cell(&m.fv_pair(&v, &w)?)?,
                    m.fh_vert(&vw)?,
                ])),
            ),
            MorphismKind::ColaxLax => (
                try_eval2!(t, ops.tc(&[
                    ops.vc(&m.fh_vert(&v)?, &m.fh_vert(&w)?)?,
                    tgt.mu(&fv, &fw)?,
                    tgt.hid_vert_cell(&m.fv_pair(&v, &w)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    m.fv_cells(&idv, &idw)?,
                    m.apply_cube(&src.mu(&v, &w)?)?,
                    m.fh_vert(&vw)?,
                ])),
            ),
            MorphismKind::ColaxColax => (
                try_eval2!(t, ops.tc(&[
                    m.fv_cells(&idv, &idw)?,
                    ops.vc(&m.fh_vert(&v)?, &m.fh_vert(&w)?)?,
                    tgt.mu(&fv, &fw)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    m.apply_cube(&src.mu(&v, &w)?)?,
                    m.fh_vert(&vw)?,
                    tgt.hid_vert_cell(&m.fv_pair(&v, &w)?)?,
                ])),
            ),
        };
        compare_cubes(t, lhs, rhs)
    });
    out.push(m12);

    // (13): compatibility with delta
    let mut m13 = LawReport::new(LawId::Morphism(13));
    let hors = src.hor_arrows();
    let mut hor_pairs: Vec<Vec<HorArrow>> = Vec::new();
    for h in &hors {
        for k in &hors {
            if composable::h_hor(h, k) {
                hor_pairs.push(vec![h.clone(), k.clone()]);
            }
            if hor_pairs.len() >= config.budget {
                break;
            }
        }
    }
    run_law(&mut m13, &hor_pairs, config.max_witnesses, |t| {
        let (h, k) = (t[0].clone(), t[1].clone());
        let (fh, fk) = (try_eval2!(t, m.apply_hor(&h)), try_eval2!(t, m.apply_hor(&k)));
        let idh = try_eval2!(t, src.vid_hor(&h));
        let idk = try_eval2!(t, src.vid_hor(&k));
        let hk = try_eval2!(t, src.h_comp_hor(&h, &k));
        let (lhs, rhs) = match m.kind {
            MorphismKind::LaxLax => (
                try_eval2!(t, ops.tc(&[
                    tgt.vid_hor_cell(&m.fh_pair(&h, &k)?)?,
                    m.fv_hor(&hk)?,
                    m.apply_cube(&src.delta(&h, &k)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    tgt.delta(&fh, &fk)?,
                    ops.hc(&m.fv_hor(&h)?, &m.fv_hor(&k)?)?,
                    m.fh_cells(&idh, &idk)?,
                ])),
            ),
            MorphismKind::ColaxLax => (
                try_eval2!(t, ops.tc(&[
                    tgt.vid_hor_cell(&m.fh_pair(&h, &k)?)?,
                    tgt.delta(&fh, &fk)?,
                    ops.hc(&m.fv_hor(&h)?, &m.fv_hor(&k)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    m.fv_hor(&hk)?,
                    m.apply_cube(&src.delta(&h, &k)?)?,
                    m.fh_cells(&idh, &idk)?,
                ])),
            ),
            MorphismKind::ColaxColax => (
                try_eval2!(t, ops.tc(&[
                    m.fv_hor(&hk)?,
                    tgt.vid_hor_cell(&m.fh_pair(&h, &k)?)?,
                    tgt.delta(&fh, &fk)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    m.apply_cube(&src.delta(&h, &k)?)?,
                    m.fh_cells(&idh, &idk)?,
                    ops.hc(&m.fv_hor(&h)?, &m.fv_hor(&k)?)?,
                ])),
            ),
        };
        compare_cubes(t, lhs, rhs)
    });
    out.push(m13);

    // (14): compatibility with chi
    let mut m14 = LawReport::new(LawId::Morphism(14));
    run_law(&mut m14, &quads, config.max_witnesses, |t| {
        let (a, b, c, d) = (t[0].clone(), t[1].clone(), t[2].clone(), t[3].clone());
        let (fa, fb, fc, fd) = (
            try_eval2!(t, m.apply_basic(&a)),
            try_eval2!(t, m.apply_basic(&b)),
            try_eval2!(t, m.apply_basic(&c)),
            try_eval2!(t, m.apply_basic(&d)),
        );
        let ab = try_eval2!(t, src.h_comp_basic(&a, &b));
        let cd = try_eval2!(t, src.h_comp_basic(&c, &d));
        let ac = try_eval2!(t, src.v_comp_basic(&a, &c));
        let bd = try_eval2!(t, src.v_comp_basic(&b, &d));
        let (lhs, rhs) = match m.kind {
            MorphismKind::LaxLax => (
                try_eval2!(t, ops.tc(&[
                    ops.vc(&m.fh_cells(&a, &b)?, &m.fh_cells(&c, &d)?)?,
                    m.fv_cells(&ab, &cd)?,
                    m.apply_cube(&src.chi(&a, &b, &c, &d)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    tgt.chi(&fa, &fb, &fc, &fd)?,
                    ops.hc(&m.fv_cells(&a, &c)?, &m.fv_cells(&b, &d)?)?,
                    m.fh_cells(&ac, &bd)?,
                ])),
            ),
            MorphismKind::ColaxLax => (
                try_eval2!(t, ops.tc(&[
                    ops.vc(&m.fh_cells(&a, &b)?, &m.fh_cells(&c, &d)?)?,
                    tgt.chi(&fa, &fb, &fc, &fd)?,
                    ops.hc(&m.fv_cells(&a, &c)?, &m.fv_cells(&b, &d)?)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    m.fv_cells(&ab, &cd)?,
                    m.apply_cube(&src.chi(&a, &b, &c, &d)?)?,
                    m.fh_cells(&ac, &bd)?,
                ])),
            ),
            MorphismKind::ColaxColax => (
                try_eval2!(t, ops.tc(&[
                    m.fv_cells(&ab, &cd)?,
                    ops.vc(&m.fh_cells(&a, &b)?, &m.fh_cells(&c, &d)?)?,
                    tgt.chi(&fa, &fb, &fc, &fd)?,
                ])),
                try_eval2!(t, ops.tc(&[
                    m.apply_cube(&src.chi(&a, &b, &c, &d)?)?,
                    m.fh_cells(&ac, &bd)?,
                    ops.hc(&m.fv_cells(&a, &c)?, &m.fv_cells(&b, &d)?)?,
                ])),
            ),
        };
        compare_cubes(t, lhs, rhs)
    });
    out.push(m14);

    let _ = vpairs;
    let _ = hpairs;
    Ok(out)
}

fn compare_cubes<I: std::fmt::Debug>(inputs: &[I], lhs: Cube, rhs: Cube) -> Eval {
    let equal = lhs == rhs;
    Eval::Compared(equal, Witness::new(inputs, lhs, rhs))
}

macro_rules! try_eval2 {
    ($inputs:expr, $e:expr) => {
        match (|| -> OpResult<_> { $e })() {
            Ok(v) => v,
            Err(err) => return eval_error($inputs, &err),
        }
    };
}
use try_eval2;

// ---- double cells ----

/// The three double-cell shapes, by the kinds on their boundaries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CellShape {
    /// lax-lax top and bottom, colax-lax left and right.
    Horizontal,
    /// colax-lax top and bottom, colax-colax left and right.
    Vertical,
    /// lax-lax top and bottom, colax-colax left and right.
    Basic,
}

impl CellShape {
    pub fn parse(s: &str) -> Result<CellShape, String> {
        match s {
            "h" => Ok(CellShape::Horizontal),
            "v" => Ok(CellShape::Vertical),
            "b" => Ok(CellShape::Basic),
            other => Err(format!("unknown cell shape '{}'", other)),
        }
    }

    fn arrow_kinds(&self) -> (MorphismKind, MorphismKind) {
        match self {
            CellShape::Horizontal => (MorphismKind::LaxLax, MorphismKind::ColaxLax),
            CellShape::Vertical => (MorphismKind::ColaxLax, MorphismKind::ColaxColax),
            CellShape::Basic => (MorphismKind::LaxLax, MorphismKind::ColaxColax),
        }
    }
}

#[derive(Default, Clone)]
pub struct CellTables {
    pub pi_obj: HashMap<Val, TransArrow>,
    pub pi_vert: HashMap<Val, VertCell>,
    pub pi_hor: HashMap<Val, HorCell>,
    pub pi_basic: HashMap<Val, Cube>,
}

enum CellMaps {
    /// components are transversal identities of the shared composite
    Identity,
    Table(Box<CellTables>),
    PastedH(Arc<CellData>, Arc<CellData>),
    PastedV(Arc<CellData>, Arc<CellData>),
    Perturbed(Arc<CellData>, Box<CellTables>),
}

/// A double cell between four morphisms: `top` and `bottom` run across,
/// `left` and `right` run down; components go from right-then-top to
/// bottom-then-left.
pub struct CellData {
    pub name: String,
    pub shape: CellShape,
    pub top: Arc<MorphismData>,
    pub bottom: Arc<MorphismData>,
    pub left: Arc<MorphismData>,
    pub right: Arc<MorphismData>,
    maps: CellMaps,
}

impl CellData {
    pub fn validate_structure(&self) -> Result<(), String> {
        let (tb_kind, lr_kind) = self.shape.arrow_kinds();
        for (m, role, want) in [
            (&self.top, "top", tb_kind),
            (&self.bottom, "bottom", tb_kind),
            (&self.left, "left", lr_kind),
            (&self.right, "right", lr_kind),
        ] {
            if m.kind != want {
                return Err(format!(
                    "cell {}: {} morphism {} has kind {:?}, expected {:?}",
                    self.name, role, m.name, m.kind, want
                ));
            }
        }
        if !Arc::ptr_eq(&self.top.source, &self.left.source) {
            return Err(format!("cell {}: top and left sources differ", self.name));
        }
        if !Arc::ptr_eq(&self.top.target, &self.right.source) {
            return Err(format!("cell {}: top target is not the right source", self.name));
        }
        if !Arc::ptr_eq(&self.left.target, &self.bottom.source) {
            return Err(format!("cell {}: left target is not the bottom source", self.name));
        }
        if !Arc::ptr_eq(&self.right.target, &self.bottom.target) {
            return Err(format!("cell {}: right and bottom targets differ", self.name));
        }
        Ok(())
    }

    /// The instance all components live in.
    fn codomain(&self) -> &dyn InterInstance {
        self.bottom.target.as_ref()
    }

    pub fn pi_obj(&self, a: &ObjId) -> OpResult<TransArrow> {
        match &self.maps {
            CellMaps::Identity => {
                self.codomain().t_id_obj(&self.right.apply_obj(&self.top.apply_obj(a)?)?)
            }
            CellMaps::Table(t) => t.pi_obj.get(&a.0).cloned().ok_or_else(|| missing!("pi_obj", a)),
            CellMaps::PastedH(p, q) => {
                let first = q.pi_obj(&p.top.apply_obj(a)?)?;
                let second = q.bottom.apply_trans(&p.pi_obj(a)?)?;
                self.codomain().t_comp_trans(&first, &second)
            }
            CellMaps::PastedV(p, q) => {
                let first = q.right.apply_trans(&p.pi_obj(a)?)?;
                let second = q.pi_obj(&p.left.apply_obj(a)?)?;
                self.codomain().t_comp_trans(&first, &second)
            }
            CellMaps::Perturbed(b, t) => match t.pi_obj.get(&a.0) {
                Some(x) => Ok(x.clone()),
                None => b.pi_obj(a),
            },
        }
    }

    pub fn pi_vert(&self, v: &VertArrow) -> OpResult<VertCell> {
        match &self.maps {
            CellMaps::Identity => {
                self.codomain().t_id_vert(&self.right.apply_vert(&self.top.apply_vert(v)?)?)
            }
            CellMaps::Table(t) => t.pi_vert.get(&v.id).cloned().ok_or_else(|| missing!("pi_vert", v)),
            CellMaps::PastedH(p, q) => {
                let first = q.pi_vert(&p.top.apply_vert(v)?)?;
                let second = q.bottom.apply_vert_cell(&p.pi_vert(v)?)?;
                self.codomain().t_comp_vert_cell(&first, &second)
            }
            CellMaps::PastedV(p, q) => {
                let first = q.right.apply_vert_cell(&p.pi_vert(v)?)?;
                let second = q.pi_vert(&p.left.apply_vert(v)?)?;
                self.codomain().t_comp_vert_cell(&first, &second)
            }
            CellMaps::Perturbed(b, t) => match t.pi_vert.get(&v.id) {
                Some(x) => Ok(x.clone()),
                None => b.pi_vert(v),
            },
        }
    }

    pub fn pi_hor(&self, h: &HorArrow) -> OpResult<HorCell> {
        match &self.maps {
            CellMaps::Identity => {
                self.codomain().t_id_hor(&self.right.apply_hor(&self.top.apply_hor(h)?)?)
            }
            CellMaps::Table(t) => t.pi_hor.get(&h.id).cloned().ok_or_else(|| missing!("pi_hor", h)),
            CellMaps::PastedH(p, q) => {
                let first = q.pi_hor(&p.top.apply_hor(h)?)?;
                let second = q.bottom.apply_hor_cell(&p.pi_hor(h)?)?;
                self.codomain().t_comp_hor_cell(&first, &second)
            }
            CellMaps::PastedV(p, q) => {
                let first = q.right.apply_hor_cell(&p.pi_hor(h)?)?;
                let second = q.pi_hor(&p.left.apply_hor(h)?)?;
                self.codomain().t_comp_hor_cell(&first, &second)
            }
            CellMaps::Perturbed(b, t) => match t.pi_hor.get(&h.id) {
                Some(x) => Ok(x.clone()),
                None => b.pi_hor(h),
            },
        }
    }

    pub fn pi_basic(&self, c: &BasicCell) -> OpResult<Cube> {
        match &self.maps {
            CellMaps::Identity => {
                self.codomain().t_id_basic(&self.right.apply_basic(&self.top.apply_basic(c)?)?)
            }
            CellMaps::Table(t) => t.pi_basic.get(&c.id).cloned().ok_or_else(|| missing!("pi_basic", c)),
            CellMaps::PastedH(p, q) => {
                let first = q.pi_basic(&p.top.apply_basic(c)?)?;
                let second = q.bottom.apply_cube(&p.pi_basic(c)?)?;
                self.codomain().t_comp_cube(&first, &second)
            }
            CellMaps::PastedV(p, q) => {
                let first = q.right.apply_cube(&p.pi_basic(c)?)?;
                let second = q.pi_basic(&p.left.apply_basic(c)?)?;
                self.codomain().t_comp_cube(&first, &second)
            }
            CellMaps::Perturbed(b, t) => match t.pi_basic.get(&c.id) {
                Some(x) => Ok(x.clone()),
                None => b.pi_basic(c),
            },
        }
    }

    /// Literal component data over the source enumerators, for strictness
    /// comparisons.
    pub fn materialize(&self) -> BTreeMap<String, String> {
        let src = self.top.source.as_ref();
        let mut out = BTreeMap::new();
        for a in src.objects() {
            if let Ok(x) = self.pi_obj(&a) {
                out.insert(format!("ob:{:?}", a), format!("{:?}", x));
            }
        }
        for v in src.vert_arrows() {
            if let Ok(x) = self.pi_vert(&v) {
                out.insert(format!("v:{:?}", v), format!("{:?}", x));
            }
        }
        for h in src.hor_arrows() {
            if let Ok(x) = self.pi_hor(&h) {
                out.insert(format!("h:{:?}", h), format!("{:?}", x));
            }
        }
        for c in src.basic_cells() {
            if let Ok(x) = self.pi_basic(&c) {
                out.insert(format!("b:{:?}", c), format!("{:?}", x));
            }
        }
        out
    }
}

/// The identity cell whiskering a left/right edge; its top and bottom are
/// identity morphisms.
pub fn identity_cell_on_edge(shape: CellShape, edge: Arc<MorphismData>) -> CellData {
    let (tb_kind, _) = shape.arrow_kinds();
    let top = Arc::new(identity_morphism(edge.source.clone(), tb_kind));
    let bottom = Arc::new(identity_morphism(edge.target.clone(), tb_kind));
    CellData {
        name: format!("id|{}", edge.name),
        shape,
        top,
        bottom,
        left: edge.clone(),
        right: edge,
        maps: CellMaps::Identity,
    }
}

/// The identity cell whiskering a top/bottom edge; its left and right are
/// identity morphisms.
pub fn identity_cell_on_arrow(shape: CellShape, arrow: Arc<MorphismData>) -> CellData {
    let (_, lr_kind) = shape.arrow_kinds();
    let left = Arc::new(identity_morphism(arrow.source.clone(), lr_kind));
    let right = Arc::new(identity_morphism(arrow.target.clone(), lr_kind));
    CellData {
        name: format!("id-{}", arrow.name),
        shape,
        top: arrow.clone(),
        bottom: arrow,
        left,
        right,
        maps: CellMaps::Identity,
    }
}

pub fn table_cell(
    name: String,
    shape: CellShape,
    top: Arc<MorphismData>,
    bottom: Arc<MorphismData>,
    left: Arc<MorphismData>,
    right: Arc<MorphismData>,
    tables: CellTables,
) -> CellData {
    CellData { name, shape, top, bottom, left, right, maps: CellMaps::Table(Box::new(tables)) }
}

pub fn perturbed_cell(base: Arc<CellData>, overrides: CellTables) -> CellData {
    CellData {
        name: format!("{}~pert", base.name),
        shape: base.shape,
        top: base.top.clone(),
        bottom: base.bottom.clone(),
        left: base.left.clone(),
        right: base.right.clone(),
        maps: CellMaps::Perturbed(base, Box::new(overrides)),
    }
}

/// Horizontal pasting along a shared vertical edge.
pub fn paste_cells_h(p: &Arc<CellData>, q: &Arc<CellData>) -> Result<CellData, String> {
    if p.shape != q.shape {
        return Err(format!("shape mismatch: {:?} vs {:?}", p.shape, q.shape));
    }
    if !Arc::ptr_eq(&p.right, &q.left) {
        return Err("edge mismatch: right edge of the first is not the left edge of the second".into());
    }
    let top = Arc::new(compose_morphisms(&p.top, &q.top)?);
    let bottom = Arc::new(compose_morphisms(&p.bottom, &q.bottom)?);
    Ok(CellData {
        name: format!("({}|{})", p.name, q.name),
        shape: p.shape,
        top,
        bottom,
        left: p.left.clone(),
        right: q.right.clone(),
        maps: CellMaps::PastedH(p.clone(), q.clone()),
    })
}

/// Vertical pasting along a shared horizontal edge.
pub fn paste_cells_v(p: &Arc<CellData>, q: &Arc<CellData>) -> Result<CellData, String> {
    if p.shape != q.shape {
        return Err(format!("shape mismatch: {:?} vs {:?}", p.shape, q.shape));
    }
    if !Arc::ptr_eq(&p.bottom, &q.top) {
        return Err("edge mismatch: bottom edge of the first is not the top edge of the second".into());
    }
    let left = Arc::new(compose_morphisms(&p.left, &q.left)?);
    let right = Arc::new(compose_morphisms(&p.right, &q.right)?);
    Ok(CellData {
        name: format!("({}/{})", p.name, q.name),
        shape: p.shape,
        top: p.top.clone(),
        bottom: q.bottom.clone(),
        left,
        right,
        maps: CellMaps::PastedV(p.clone(), q.clone()),
    })
}

/// Evaluates the two double-cell condition groups as law reports:
/// vertical-structure compatibility (`CELL-V`) and horizontal-structure
/// compatibility (`CELL-H`).
pub fn check_cell(cell: &CellData, config: &CheckConfig) -> Result<Vec<LawReport>, String> {
    cell.validate_structure()?;
    let src = cell.top.source.as_ref();
    let cod = cell.codomain();
    let ops = Ops(cod);
    let phi = &cell.top;
    let psi = &cell.bottom;
    let sig = &cell.left;
    let the = &cell.right;
    // structural: component boundaries match the four data shapes
    for a in src.objects() {
        if let Ok(pa) = cell.pi_obj(&a) {
            let s = the.apply_obj(&phi.apply_obj(&a).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let t = psi.apply_obj(&sig.apply_obj(&a).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            if pa.src != s || pa.tgt != t {
                return Err(format!("cell {}: component at object {:?} has wrong boundary", cell.name, a));
            }
        }
    }
    for c in src.basic_cells() {
        if let Ok(pc) = cell.pi_basic(&c) {
            let back = the.apply_basic(&phi.apply_basic(&c).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            let front = psi.apply_basic(&sig.apply_basic(&c).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            if pc.back != back || pc.front != front {
                return Err(format!(
                    "cell {}: component at basic cell {:?} has wrong faces",
                    cell.name, c
                ));
            }
        }
    }

    let mut rng = StdRng::seed_from_u64(config.seed);
    let cells = src.basic_cells();
    let vpairs = crate::laws::grids_for_morphisms(&cells, 2, 1, config.budget, &mut rng);
    let hpairs = crate::laws::grids_for_morphisms(&cells, 1, 2, config.budget, &mut rng);

    let vert_hexagon = cell.shape != CellShape::Horizontal;
    let mut cell_v = LawReport::new(LawId::CellV);
    {
        // object-level (5)/(5'): one check per object
        let objs: Vec<Vec<ObjId>> = src.objects().iter().map(|a| vec![a.clone()]).collect();
        run_law(&mut cell_v, &objs, config.max_witnesses, |t| {
            let a = t[0].clone();
            let (lhs, rhs) = if !vert_hexagon {
                // square at the level of horizontal arrows; specialize to
                // the identity horizontal arrow of the object
                let h = try_eval2!(t, src.hid_obj(&a));
                (
                    try_eval2!(t, ops.tc(&[
                        the.fv_hor(&phi.apply_hor(&h)?)?,
                        the.apply_cube(&phi.fv_hor(&h)?)?,
                        cell.pi_basic(&src.vid_hor(&h)?)?,
                    ])),
                    try_eval2!(t, ops.tc(&[
                        cod.vid_hor_cell(&cell.pi_hor(&h)?)?,
                        psi.fv_hor(&sig.apply_hor(&h)?)?,
                        psi.apply_cube(&sig.fv_hor(&h)?)?,
                    ])),
                )
            } else {
                // hexagon at object level, with colax sides
                let route1 = try_eval2!(t, ops.tc_vert(&[
                    the.fv_obj(&phi.apply_obj(&a)?)?,
                    cod.vid_trans(&cell.pi_obj(&a)?)?,
                    psi.fv_obj(&sig.apply_obj(&a)?)?,
                ]));
                let route2 = try_eval2!(t, ops.tc_vert(&[
                    the.apply_vert_cell(&phi.fv_obj(&a)?)?,
                    cell.pi_vert(&src.vid_obj(&a)?)?,
                    psi.apply_vert_cell(&sig.fv_obj(&a)?)?,
                ]));
                return Eval::Compared(route1 == route2, Witness::new(t, route1, route2));
            };
            compare_cubes(t, lhs, rhs)
        });
        // cell-level (6)/(6')
        run_law(&mut cell_v, &vpairs, config.max_witnesses, |t| {
            let (a, b) = (t[0].clone(), t[1].clone());
            let ab = try_eval2!(t, src.v_comp_basic(&a, &b));
            let (lhs, rhs) = if !vert_hexagon {
                (
                    try_eval2!(t, ops.tc(&[
                        the.fv_cells(&phi.apply_basic(&a)?, &phi.apply_basic(&b)?)?,
                        the.apply_cube(&phi.fv_cells(&a, &b)?)?,
                        cell.pi_basic(&ab)?,
                    ])),
                    try_eval2!(t, ops.tc(&[
                        ops.vc(&cell.pi_basic(&a)?, &cell.pi_basic(&b)?)?,
                        psi.fv_cells(&sig.apply_basic(&a)?, &sig.apply_basic(&b)?)?,
                        psi.apply_cube(&sig.fv_cells(&a, &b)?)?,
                    ])),
                )
            } else {
                (
                    try_eval2!(t, ops.tc(&[
                        the.fv_cells(&phi.apply_basic(&a)?, &phi.apply_basic(&b)?)?,
                        ops.vc(&cell.pi_basic(&a)?, &cell.pi_basic(&b)?)?,
                        psi.fv_cells(&sig.apply_basic(&a)?, &sig.apply_basic(&b)?)?,
                    ])),
                    try_eval2!(t, ops.tc(&[
                        the.apply_cube(&phi.fv_cells(&a, &b)?)?,
                        cell.pi_basic(&ab)?,
                        psi.apply_cube(&sig.fv_cells(&a, &b)?)?,
                    ])),
                )
            };
            compare_cubes(t, lhs, rhs)
        });
    }

    let hor_square = cell.shape == CellShape::Vertical;
    let mut cell_h = LawReport::new(LawId::CellH);
    {
        // (7): one check per vertical arrow
        let verts: Vec<Vec<VertArrow>> = src.vert_arrows().iter().map(|v| vec![v.clone()]).collect();
        run_law(&mut cell_h, &verts, config.max_witnesses, |t| {
            let v = t[0].clone();
            let idv = try_eval2!(t, src.hid_vert(&v));
            let (lhs, rhs) = if hor_square {
                (
                    try_eval2!(t, ops.tc(&[
                        the.apply_cube(&phi.fh_vert(&v)?)?,
                        the.fh_vert(&phi.apply_vert(&v)?)?,
                        cod.hid_vert_cell(&cell.pi_vert(&v)?)?,
                    ])),
                    try_eval2!(t, ops.tc(&[
                        cell.pi_basic(&idv)?,
                        psi.apply_cube(&sig.fh_vert(&v)?)?,
                        psi.fh_vert(&sig.apply_vert(&v)?)?,
                    ])),
                )
            } else {
                (
                    try_eval2!(t, ops.tc(&[
                        the.fh_vert(&phi.apply_vert(&v)?)?,
                        cod.hid_vert_cell(&cell.pi_vert(&v)?)?,
                        psi.fh_vert(&sig.apply_vert(&v)?)?,
                    ])),
                    try_eval2!(t, ops.tc(&[
                        the.apply_cube(&phi.fh_vert(&v)?)?,
                        cell.pi_basic(&idv)?,
                        psi.apply_cube(&sig.fh_vert(&v)?)?,
                    ])),
                )
            };
            compare_cubes(t, lhs, rhs)
        });
        // (8): horizontally composable pairs
        run_law(&mut cell_h, &hpairs, config.max_witnesses, |t| {
            let (a, b) = (t[0].clone(), t[1].clone());
            let ab = try_eval2!(t, src.h_comp_basic(&a, &b));
            let (lhs, rhs) = if hor_square {
                (
                    try_eval2!(t, ops.tc(&[
                        the.apply_cube(&phi.fh_cells(&a, &b)?)?,
                        the.fh_cells(&phi.apply_basic(&a)?, &phi.apply_basic(&b)?)?,
                        ops.hc(&cell.pi_basic(&a)?, &cell.pi_basic(&b)?)?,
                    ])),
                    try_eval2!(t, ops.tc(&[
                        cell.pi_basic(&ab)?,
                        psi.apply_cube(&sig.fh_cells(&a, &b)?)?,
                        psi.fh_cells(&sig.apply_basic(&a)?, &sig.apply_basic(&b)?)?,
                    ])),
                )
            } else {
                (
                    try_eval2!(t, ops.tc(&[
                        the.fh_cells(&phi.apply_basic(&a)?, &phi.apply_basic(&b)?)?,
                        ops.hc(&cell.pi_basic(&a)?, &cell.pi_basic(&b)?)?,
                        psi.fh_cells(&sig.apply_basic(&a)?, &sig.apply_basic(&b)?)?,
                    ])),
                    try_eval2!(t, ops.tc(&[
                        the.apply_cube(&phi.fh_cells(&a, &b)?)?,
                        cell.pi_basic(&ab)?,
                        psi.apply_cube(&sig.fh_cells(&a, &b)?)?,
                    ])),
                )
            };
            compare_cubes(t, lhs, rhs)
        });
    }

    Ok(vec![cell_v, cell_h])
}

// ---- commuting cubes ----

/// Six cells arranged as the faces of a cube: `back`/`front` are basic
/// cells, `top`/`bottom` horizontal cells and `left`/`right` vertical cells.
pub struct CubeFaces {
    pub back: Arc<CellData>,
    pub front: Arc<CellData>,
    pub top: Arc<CellData>,
    pub bottom: Arc<CellData>,
    pub left: Arc<CellData>,
    pub right: Arc<CellData>,
}

impl CubeFaces {
    pub fn validate(&self) -> Result<(), String> {
        let shapes = [
            (self.back.shape, CellShape::Basic, "back"),
            (self.front.shape, CellShape::Basic, "front"),
            (self.top.shape, CellShape::Horizontal, "top"),
            (self.bottom.shape, CellShape::Horizontal, "bottom"),
            (self.left.shape, CellShape::Vertical, "left"),
            (self.right.shape, CellShape::Vertical, "right"),
        ];
        for (got, want, role) in shapes {
            if got != want {
                return Err(format!("{} face has shape {:?}, expected {:?}", role, got, want));
            }
        }
        let edges = [
            (Arc::ptr_eq(&self.back.top, &self.top.top), "back.top = top.top"),
            (Arc::ptr_eq(&self.front.top, &self.top.bottom), "front.top = top.bottom"),
            (Arc::ptr_eq(&self.back.bottom, &self.bottom.top), "back.bottom = bottom.top"),
            (Arc::ptr_eq(&self.front.bottom, &self.bottom.bottom), "front.bottom = bottom.bottom"),
            (Arc::ptr_eq(&self.back.left, &self.left.left), "back.left = left.left"),
            (Arc::ptr_eq(&self.front.left, &self.left.right), "front.left = left.right"),
            (Arc::ptr_eq(&self.back.right, &self.right.left), "back.right = right.left"),
            (Arc::ptr_eq(&self.front.right, &self.right.right), "front.right = right.right"),
            (Arc::ptr_eq(&self.top.left, &self.left.top), "top.left = left.top"),
            (Arc::ptr_eq(&self.top.right, &self.right.top), "top.right = right.top"),
            (Arc::ptr_eq(&self.bottom.left, &self.left.bottom), "bottom.left = left.bottom"),
            (Arc::ptr_eq(&self.bottom.right, &self.right.bottom), "bottom.right = right.bottom"),
        ];
        for (ok, what) in edges {
            if !ok {
                return Err(format!("cube faces do not share edges: {}", what));
            }
        }
        Ok(())
    }
}

/// The commuting-cube condition: for every sampled basic cell both hexagon
/// routes agree as transversal composites in the far corner instance.
pub fn cube_commutes(faces: &CubeFaces, config: &CheckConfig) -> Result<LawReport, String> {
    faces.validate()?;
    let pi = &faces.back;
    let pi2 = &faces.front;
    let kap = &faces.top;
    let kbar = &faces.bottom;
    let lam = &faces.left;
    let lbar = &faces.right;
    let phi = &pi.top; // A -> B
    let sig = &pi.left; // A -> C
    let kmor = &kap.left; // A -> A'
    let lmor = &lam.bottom; // C -> C'
    let psi2 = &pi2.bottom;
    let the2 = &pi2.right;
    let cod = psi2.target.as_ref();
    let ops = Ops(cod);
    let src = pi.top.source.as_ref();
    let mut report = LawReport::new(LawId::CubeCommute);
    let tuples: Vec<Vec<BasicCell>> = src.basic_cells().iter().map(|c| vec![c.clone()]).collect();
    run_law(&mut report, &tuples, config.max_witnesses, |t| {
        let alpha = t[0].clone();
        let route1 = try_eval2!(t, ops.tc(&[
            the2.apply_cube(&kap.pi_basic(&alpha)?)?,
            pi2.pi_basic(&kmor.apply_basic(&alpha)?)?,
            psi2.apply_cube(&lam.pi_basic(&alpha)?)?,
        ]));
        let route2 = try_eval2!(t, ops.tc(&[
            lbar.pi_basic(&phi.apply_basic(&alpha)?)?,
            lmor.apply_cube(&pi.pi_basic(&alpha)?)?,
            kbar.pi_basic(&sig.apply_basic(&alpha)?)?,
        ]));
        compare_cubes(t, route1, route2)
    });
    Ok(report)
}
