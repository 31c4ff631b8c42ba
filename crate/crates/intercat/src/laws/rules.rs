//! The individual law evaluators.
//!
//! Each coherence condition is evaluated as an equality of two transversal
//! composites of cubes (or of 2-cells, for arrow-level laws). Where the
//! common shorthand drops associativity comparisons, the evaluators insert
//! them explicitly; where two insertion routes exist (the interchange
//! associativity square), both are evaluated and must agree.

use super::*;
use std::collections::HashMap;
use std::fmt;
use crate::model::*;

/// Thin wrapper giving short names to the instance operations used by the
/// law formulas.
pub struct Ops<'a>(pub &'a dyn InterInstance);

impl<'a> Ops<'a> {
    pub fn tc(&self, cubes: &[Cube]) -> OpResult<Cube> {
        t_chain(self.0, cubes)
    }

    pub fn tc_hor(&self, cells: &[HorCell]) -> OpResult<HorCell> {
        let mut iter = cells.iter();
        let mut acc = iter.next().expect("nonempty chain").clone();
        for c in iter {
            acc = self.0.t_comp_hor_cell(&acc, c)?;
        }
        Ok(acc)
    }

    pub fn tc_vert(&self, cells: &[VertCell]) -> OpResult<VertCell> {
        let mut iter = cells.iter();
        let mut acc = iter.next().expect("nonempty chain").clone();
        for c in iter {
            acc = self.0.t_comp_vert_cell(&acc, c)?;
        }
        Ok(acc)
    }

    pub fn hc(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        self.0.h_comp_cube(a, b)
    }

    pub fn vc(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        self.0.v_comp_cube(a, b)
    }

    pub fn hb(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
        self.0.h_comp_basic(a, b)
    }

    pub fn vb(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
        self.0.v_comp_basic(a, b)
    }

    pub fn tid(&self, a: &BasicCell) -> OpResult<Cube> {
        self.0.t_id_basic(a)
    }
}

fn two<T: Clone>(t: &[T]) -> (T, T) {
    (t[0].clone(), t[1].clone())
}

fn three<T: Clone>(t: &[T]) -> (T, T, T) {
    (t[0].clone(), t[1].clone(), t[2].clone())
}

fn four<T: Clone>(t: &[T]) -> (T, T, T, T) {
    (t[0].clone(), t[1].clone(), t[2].clone(), t[3].clone())
}

macro_rules! try_eval {
    ($inputs:expr, $e:expr) => {
        match (|| -> OpResult<_> { $e })() {
            Ok(v) => v,
            Err(err) => return eval_error($inputs, &err),
        }
    };
}

fn compare<I: fmt::Debug>(inputs: &[I], lhs: Cube, rhs: Cube) -> Eval {
    let equal = lhs == rhs;
    Eval::Compared(equal, Witness::new(inputs, lhs, rhs))
}

fn compare2<I: fmt::Debug, T: PartialEq + fmt::Debug>(inputs: &[I], lhs: T, rhs: T) -> Eval {
    let equal = lhs == rhs;
    Eval::Compared(equal, Witness::new(inputs, lhs, rhs))
}

// ---- boundary soundness ----

pub(super) fn boundary(inst: &dyn InterInstance, config: &CheckConfig) -> LawReport {
    let mut report = LawReport::new(LawId::Boundary);
    let check = |report: &mut LawReport, ok: Result<(), String>, what: &dyn fmt::Debug| {
        report.checked += 1;
        if let Err(e) = ok {
            if report.failures.len() < config.max_witnesses {
                report.failures.push(Witness::new(&[what], e, "boundary rules"));
            }
        }
    };
    for c in inst.hor_cells() {
        check(&mut report, validate::hor_cell(&c), &c);
    }
    for c in inst.vert_cells() {
        check(&mut report, validate::vert_cell(&c), &c);
    }
    for c in inst.basic_cells() {
        check(&mut report, validate::basic_cell(&c), &c);
    }
    for c in inst.cubes() {
        check(&mut report, validate::cube(&c), &c);
    }
    // weak identities and transversal identities on every enumerated element
    for a in inst.objects() {
        if let Ok(h) = inst.hid_obj(&a) {
            check(&mut report, if h.src == a && h.tgt == a { Ok(()) } else { Err("hid_obj endpoints".into()) }, &h);
        }
        if let Ok(v) = inst.vid_obj(&a) {
            check(&mut report, if v.src == a && v.tgt == a { Ok(()) } else { Err("vid_obj endpoints".into()) }, &v);
        }
    }
    for v in inst.vert_arrows() {
        if let Ok(c) = inst.hid_vert(&v) {
            let ok = validate::basic_cell(&c).and_then(|_| {
                if c.left == v && c.right == v {
                    Ok(())
                } else {
                    Err("hid_vert sides".into())
                }
            });
            check(&mut report, ok, &c);
        }
    }
    for h in inst.hor_arrows() {
        if let Ok(c) = inst.vid_hor(&h) {
            let ok = validate::basic_cell(&c).and_then(|_| {
                if c.top == h && c.bottom == h {
                    Ok(())
                } else {
                    Err("vid_hor top/bottom".into())
                }
            });
            check(&mut report, ok, &c);
        }
    }
    // interchanger results are transversally special and boundary-sound
    let mut rng = config.rng_for(LawId::Boundary, 1);
    let cells = inst.basic_cells();
    let quads = grids_of(&cells, 2, 2, config.budget.min(64), &mut rng);
    for q in &quads {
        match inst.chi(&q[0], &q[1], &q[2], &q[3]) {
            Ok(cube) => {
                let ok = validate::cube(&cube).and_then(|_| {
                    match is_transversally_special(inst, &cube) {
                        Ok(true) => Ok(()),
                        Ok(false) => Err("chi is not transversally special".into()),
                        Err(e) => Err(e.to_string()),
                    }
                });
                check(&mut report, ok, &cube);
            }
            Err(OpError::MissingEntry { .. }) | Err(OpError::Unknown { .. }) => {}
            Err(e) => check(&mut report, Err(e.to_string()), &q[0]),
        }
    }
    report
}

// ---- weak double category laws ----

/// Direction-generic access to the weak structure: `H` uses horizontal
/// composition with `hid_vert` units, `V` the vertical one with `vid_hor`.
struct Weak<'a> {
    inst: &'a dyn InterInstance,
    dir: Direction,
}

impl<'a> Weak<'a> {
    fn comp(&self, a: &BasicCell, b: &BasicCell) -> OpResult<BasicCell> {
        match self.dir {
            Direction::Horizontal => self.inst.h_comp_basic(a, b),
            Direction::Vertical => self.inst.v_comp_basic(a, b),
        }
    }

    fn comp_cube(&self, a: &Cube, b: &Cube) -> OpResult<Cube> {
        match self.dir {
            Direction::Horizontal => self.inst.h_comp_cube(a, b),
            Direction::Vertical => self.inst.v_comp_cube(a, b),
        }
    }

    fn assoc(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        match self.dir {
            Direction::Horizontal => self.inst.assoc_h_cell(a, b, c),
            Direction::Vertical => self.inst.assoc_v_cell(a, b, c),
        }
    }

    fn assoc_inv(&self, a: &BasicCell, b: &BasicCell, c: &BasicCell) -> OpResult<Cube> {
        match self.dir {
            Direction::Horizontal => self.inst.assoc_h_cell_inv(a, b, c),
            Direction::Vertical => self.inst.assoc_v_cell_inv(a, b, c),
        }
    }

    fn unit_l(&self, a: &BasicCell) -> OpResult<Cube> {
        match self.dir {
            Direction::Horizontal => self.inst.unit_l_h_cell(a),
            Direction::Vertical => self.inst.unit_l_v_cell(a),
        }
    }

    fn unit_l_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        match self.dir {
            Direction::Horizontal => self.inst.unit_l_h_cell_inv(a),
            Direction::Vertical => self.inst.unit_l_v_cell_inv(a),
        }
    }

    fn unit_r(&self, a: &BasicCell) -> OpResult<Cube> {
        match self.dir {
            Direction::Horizontal => self.inst.unit_r_h_cell(a),
            Direction::Vertical => self.inst.unit_r_v_cell(a),
        }
    }

    fn unit_r_inv(&self, a: &BasicCell) -> OpResult<Cube> {
        match self.dir {
            Direction::Horizontal => self.inst.unit_r_h_cell_inv(a),
            Direction::Vertical => self.inst.unit_r_v_cell_inv(a),
        }
    }

    /// Weak identity cell on the shared middle boundary of a composable pair.
    fn unit_cell(&self, a: &BasicCell) -> OpResult<BasicCell> {
        match self.dir {
            Direction::Horizontal => self.inst.hid_vert(&a.right),
            Direction::Vertical => self.inst.vid_hor(&a.bottom),
        }
    }

    fn grid_dims(&self, n: usize) -> (usize, usize) {
        match self.dir {
            Direction::Horizontal => (1, n),
            Direction::Vertical => (n, 1),
        }
    }

    fn laws(&self) -> (LawId, LawId, LawId, LawId, LawId, LawId) {
        match self.dir {
            Direction::Horizontal => (
                LawId::WdHPentagon,
                LawId::WdHTriangle,
                LawId::NatKappaH,
                LawId::NatLambdaH,
                LawId::NatRhoH,
                LawId::MiddleFourH,
            ),
            Direction::Vertical => (
                LawId::WdVPentagon,
                LawId::WdVTriangle,
                LawId::NatKappaV,
                LawId::NatLambdaV,
                LawId::NatRhoV,
                LawId::MiddleFourV,
            ),
        }
    }
}

pub(super) fn weak_double(
    inst: &dyn InterInstance,
    dir: Direction,
    config: &CheckConfig,
) -> Vec<LawReport> {
    let weak = Weak { inst, dir };
    let ops = Ops(inst);
    let (pentagon_id, triangle_id, nat_kappa, nat_lambda, nat_rho, middle_four) = weak.laws();
    let cells = inst.basic_cells();
    let cubes = inst.cubes();

    // pentagon + associator invertibility
    let mut pentagon = LawReport::new(pentagon_id);
    {
        let mut rng = config.rng_for(pentagon_id, 0);
        let (r, c) = weak.grid_dims(4);
        let tuples = grids_of(&cells, r, c, config.budget, &mut rng);
        run_law(&mut pentagon, &tuples, config.max_witnesses, |t| {
            let (w, x, y, z) = four(t);
            let yz = try_eval!(t, weak.comp(&y, &z));
            let wx = try_eval!(t, weak.comp(&w, &x));
            let xy = try_eval!(t, weak.comp(&x, &y));
            let lhs = try_eval!(
                t,
                ops.tc(&[weak.assoc(&w, &x, &yz)?, weak.assoc(&wx, &y, &z)?])
            );
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    weak.comp_cube(&ops.tid(&w)?, &weak.assoc(&x, &y, &z)?)?,
                    weak.assoc(&w, &xy, &z)?,
                    weak.comp_cube(&weak.assoc(&w, &x, &y)?, &ops.tid(&z)?)?,
                ])
            );
            // the instance-supplied inverse really inverts
            let fwd = try_eval!(t, weak.assoc(&w, &x, &yz));
            let inv = try_eval!(t, weak.assoc_inv(&w, &x, &yz));
            let round = try_eval!(t, ops.tc(&[fwd.clone(), inv.clone()]));
            let back = try_eval!(t, ops.tc(&[inv, fwd.clone()]));
            let id_src = try_eval!(t, ops.tid(&fwd.back));
            let id_tgt = try_eval!(t, ops.tid(&fwd.front));
            if round != id_src || back != id_tgt {
                return Eval::Compared(false, Witness::new(t, round, id_src));
            }
            compare(t, lhs, rhs)
        });
    }

    // triangle + unit invertibility
    let mut triangle = LawReport::new(triangle_id);
    {
        let mut rng = config.rng_for(triangle_id, 0);
        let (r, c) = weak.grid_dims(2);
        let tuples = grids_of(&cells, r, c, config.budget, &mut rng);
        run_law(&mut triangle, &tuples, config.max_witnesses, |t| {
            let (x, y) = two(t);
            let unit = try_eval!(t, weak.unit_cell(&x));
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    weak.assoc(&x, &unit, &y)?,
                    weak.comp_cube(&weak.unit_r(&x)?, &ops.tid(&y)?)?,
                ])
            );
            let rhs = try_eval!(t, weak.comp_cube(&ops.tid(&x)?, &weak.unit_l(&y)?));
            let lam = try_eval!(t, weak.unit_l(&y));
            let lam_inv = try_eval!(t, weak.unit_l_inv(&y));
            let round = try_eval!(t, ops.tc(&[lam.clone(), lam_inv]));
            let id_src = try_eval!(t, ops.tid(&lam.back));
            let rho = try_eval!(t, weak.unit_r(&x));
            let rho_inv = try_eval!(t, weak.unit_r_inv(&x));
            let round_r = try_eval!(t, ops.tc(&[rho_inv, rho.clone()]));
            let id_tgt = try_eval!(t, ops.tid(&rho.front));
            if round != id_src || round_r != id_tgt {
                return Eval::Compared(false, Witness::new(t, round, id_src));
            }
            compare(t, lhs, rhs)
        });
    }

    // naturality of the associator against cube triples
    let mut kappa_nat = LawReport::new(nat_kappa);
    {
        let mut rng = config.rng_for(nat_kappa, 0);
        let (r, c) = weak.grid_dims(3);
        let tuples = grids_of(&cubes, r, c, config.budget, &mut rng);
        run_law(&mut kappa_nat, &tuples, config.max_witnesses, |t| {
            let (c1, c2, c3) = three(t);
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    weak.assoc(&c1.back, &c2.back, &c3.back)?,
                    weak.comp_cube(&weak.comp_cube(&c1, &c2)?, &c3)?,
                ])
            );
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    weak.comp_cube(&c1, &weak.comp_cube(&c2, &c3)?)?,
                    weak.assoc(&c1.front, &c2.front, &c3.front)?,
                ])
            );
            compare(t, lhs, rhs)
        });
    }

    // naturality of the unit comparisons against single cubes
    let mut lambda_nat = LawReport::new(nat_lambda);
    let mut rho_nat = LawReport::new(nat_rho);
    {
        let tuples: Vec<Vec<Cube>> = cubes.iter().map(|c| vec![c.clone()]).collect();
        run_law(&mut lambda_nat, &tuples, config.max_witnesses, |t| {
            let c = t[0].clone();
            let lhs = try_eval!(t, ops.tc(&[weak.unit_l(&c.back)?, c.clone()]));
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    weak.comp_cube(&weak.unit_face_cube_left(&c)?, &c)?,
                    weak.unit_l(&c.front)?,
                ])
            );
            compare(t, lhs, rhs)
        });
        run_law(&mut rho_nat, &tuples, config.max_witnesses, |t| {
            let c = t[0].clone();
            let lhs = try_eval!(t, ops.tc(&[weak.unit_r(&c.back)?, c.clone()]));
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    weak.comp_cube(&c, &weak.unit_face_cube_right(&c)?)?,
                    weak.unit_r(&c.front)?,
                ])
            );
            compare(t, lhs, rhs)
        });
    }

    // strict transversal category laws on all four transversal sorts
    let mut strict = LawReport::new(LawId::StrictT);
    {
        let mut rng = config.rng_for(LawId::StrictT, dir as u64);
        let trans = inst.trans_arrows();
        let triples = chains_of(&trans, 3, config.budget, &mut rng, |f| f.tgt.clone(), |f| f.src.clone());
        run_law(&mut strict, &triples, config.max_witnesses, |t| {
            let (f, g, h) = three(t);
            let lhs = try_eval!(t, inst.t_comp_trans(&inst.t_comp_trans(&f, &g)?, &h));
            let rhs = try_eval!(t, inst.t_comp_trans(&f, &inst.t_comp_trans(&g, &h)?));
            compare2(t, lhs, rhs)
        });
        let singles: Vec<Vec<TransArrow>> = trans.iter().map(|f| vec![f.clone()]).collect();
        run_law(&mut strict, &singles, config.max_witnesses, |t| {
            let f = t[0].clone();
            let lhs = try_eval!(t, inst.t_comp_trans(&inst.t_id_obj(&f.src)?, &f));
            let rhs = try_eval!(t, inst.t_comp_trans(&f, &inst.t_id_obj(&f.tgt)?));
            if lhs != f {
                return Eval::Compared(false, Witness::new(t, lhs, f));
            }
            compare2(t, rhs, f)
        });
        let cubes3 = chains_of(&cubes, 3, config.budget, &mut rng, |c: &Cube| c.front.clone(), |c| c.back.clone());
        run_law(&mut strict, &cubes3, config.max_witnesses, |t| {
            let (a, b, c) = three(t);
            let lhs = try_eval!(t, ops.tc(&[ops.tc(&[a.clone(), b.clone()])?, c.clone()]));
            let rhs = try_eval!(t, ops.tc(&[a.clone(), ops.tc(&[b, c])?]));
            compare(t, lhs, rhs)
        });
        let cube_singles: Vec<Vec<Cube>> = cubes.iter().map(|c| vec![c.clone()]).collect();
        run_law(&mut strict, &cube_singles, config.max_witnesses, |t| {
            let c = t[0].clone();
            let lhs = try_eval!(t, ops.tc(&[inst.t_id_basic(&c.back)?, c.clone()]));
            let rhs = try_eval!(t, ops.tc(&[c.clone(), inst.t_id_basic(&c.front)?]));
            if lhs != c {
                return Eval::Compared(false, Witness::new(t, lhs, c));
            }
            compare(t, rhs, c)
        });
        let hcells = inst.hor_cells();
        let hc3 = chains_of(&hcells, 2, config.budget, &mut rng, |c: &HorCell| c.bottom.clone(), |c| c.top.clone());
        run_law(&mut strict, &hc3, config.max_witnesses, |t| {
            let (a, b) = two(t);
            let ab = try_eval!(t, inst.t_comp_hor_cell(&a, &b));
            let viaid = try_eval!(
                t,
                inst.t_comp_hor_cell(&inst.t_comp_hor_cell(&a, &inst.t_id_hor(&a.bottom)?)?, &b)
            );
            compare2(t, ab, viaid)
        });
        let vcells = inst.vert_cells();
        let vc3 = chains_of(&vcells, 2, config.budget, &mut rng, |c: &VertCell| c.right.clone(), |c| c.left.clone());
        run_law(&mut strict, &vc3, config.max_witnesses, |t| {
            let (a, b) = two(t);
            let ab = try_eval!(t, inst.t_comp_vert_cell(&a, &b));
            let viaid = try_eval!(
                t,
                inst.t_comp_vert_cell(&inst.t_comp_vert_cell(&a, &inst.t_id_vert(&a.right)?)?, &b)
            );
            compare2(t, ab, viaid)
        });
    }

    // middle-four interchange of the weak composition with transversal
    // composition, at cube and 2-cell level
    let mut mf = LawReport::new(middle_four);
    {
        let mut rng = config.rng_for(middle_four, 0);
        let (r, c) = weak.grid_dims(2);
        let pairs = grids_of(&cubes, r, c, config.budget, &mut rng);
        // index cubes by back face to extend pairs transversally
        let mut by_back: HashMap<BasicCell, Vec<&Cube>> = HashMap::new();
        for cube in &cubes {
            by_back.entry(cube.back.clone()).or_default().push(cube);
        }
        let mut tuples: Vec<Vec<Cube>> = Vec::new();
        'outer: for pair in &pairs {
            let (a, b) = two(pair);
            let empty = Vec::new();
            for c1 in by_back.get(&a.front).unwrap_or(&empty) {
                for d1 in by_back.get(&b.front).unwrap_or(&empty) {
                    let ok = match dir {
                        Direction::Horizontal => composable::h_cube(c1, d1),
                        Direction::Vertical => composable::v_cube(c1, d1),
                    };
                    if ok {
                        tuples.push(vec![a.clone(), b.clone(), (*c1).clone(), (*d1).clone()]);
                        if tuples.len() >= config.budget {
                            break 'outer;
                        }
                    }
                }
            }
        }
        run_law(&mut mf, &tuples, config.max_witnesses, |t| {
            let (a, b, c1, d1) = four(t);
            let lhs = try_eval!(
                t,
                ops.tc(&[weak.comp_cube(&a, &b)?, weak.comp_cube(&c1, &d1)?])
            );
            let rhs = try_eval!(
                t,
                weak.comp_cube(&ops.tc(&[a.clone(), c1])?, &ops.tc(&[b, d1])?)
            );
            compare(t, lhs, rhs)
        });
    }

    vec![pentagon, triangle, kappa_nat, lambda_nat, rho_nat, strict, mf]
}

impl<'a> Weak<'a> {
    /// Weak identity cube on the incoming boundary face of a cube.
    fn unit_face_cube_left(&self, c: &Cube) -> OpResult<Cube> {
        match self.dir {
            Direction::Horizontal => self.inst.hid_vert_cell(&c.left),
            Direction::Vertical => self.inst.vid_hor_cell(&c.top),
        }
    }

    /// Weak identity cube on the outgoing boundary face of a cube.
    fn unit_face_cube_right(&self, c: &Cube) -> OpResult<Cube> {
        match self.dir {
            Direction::Horizontal => self.inst.hid_vert_cell(&c.right),
            Direction::Vertical => self.inst.vid_hor_cell(&c.bottom),
        }
    }
}

// ---- interchanger naturality ----

pub(super) fn interchanger_naturality(
    inst: &dyn InterInstance,
    config: &CheckConfig,
) -> Vec<LawReport> {
    let ops = Ops(inst);
    let cubes = inst.cubes();

    let mut chi_nat = LawReport::new(LawId::NatChi);
    {
        let mut rng = config.rng_for(LawId::NatChi, 0);
        let tuples = grids_of(&cubes, 2, 2, config.budget, &mut rng);
        run_law(&mut chi_nat, &tuples, config.max_witnesses, |t| {
            let (c1, c2, c3, c4) = four(t);
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    inst.chi(&c1.back, &c2.back, &c3.back, &c4.back)?,
                    ops.hc(&ops.vc(&c1, &c3)?, &ops.vc(&c2, &c4)?)?,
                ])
            );
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    ops.vc(&ops.hc(&c1, &c2)?, &ops.hc(&c3, &c4)?)?,
                    inst.chi(&c1.front, &c2.front, &c3.front, &c4.front)?,
                ])
            );
            compare(t, lhs, rhs)
        });
    }

    let mut mu_nat = LawReport::new(LawId::NatMu);
    {
        let mut rng = config.rng_for(LawId::NatMu, 0);
        let vcells = inst.vert_cells();
        let pairs = chains_of(&vcells, 2, config.budget, &mut rng,
            |c: &VertCell| c.bottom.clone(), |c| c.top.clone());
        run_law(&mut mu_nat, &pairs, config.max_witnesses, |t| {
            let (p1, p2) = two(t);
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    inst.mu(&p1.left, &p2.left)?,
                    inst.hid_vert_cell(&inst.v_comp_vert_cell(&p1, &p2)?)?,
                ])
            );
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    ops.vc(&inst.hid_vert_cell(&p1)?, &inst.hid_vert_cell(&p2)?)?,
                    inst.mu(&p1.right, &p2.right)?,
                ])
            );
            compare(t, lhs, rhs)
        });
    }

    let mut delta_nat = LawReport::new(LawId::NatDelta);
    {
        let mut rng = config.rng_for(LawId::NatDelta, 0);
        let hcells = inst.hor_cells();
        let pairs = chains_of(&hcells, 2, config.budget, &mut rng,
            |c: &HorCell| c.right.clone(), |c| c.left.clone());
        run_law(&mut delta_nat, &pairs, config.max_witnesses, |t| {
            let (p1, p2) = two(t);
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    inst.delta(&p1.top, &p2.top)?,
                    ops.hc(&inst.vid_hor_cell(&p1)?, &inst.vid_hor_cell(&p2)?)?,
                ])
            );
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    inst.vid_hor_cell(&inst.h_comp_hor_cell(&p1, &p2)?)?,
                    inst.delta(&p1.bottom, &p2.bottom)?,
                ])
            );
            compare(t, lhs, rhs)
        });
    }

    let mut tau_nat = LawReport::new(LawId::NatTau);
    {
        let tuples: Vec<Vec<TransArrow>> = inst.trans_arrows().iter().map(|f| vec![f.clone()]).collect();
        run_law(&mut tau_nat, &tuples, config.max_witnesses, |t| {
            let f = t[0].clone();
            let lhs = try_eval!(
                t,
                ops.tc(&[inst.tau(&f.src)?, inst.hid_vert_cell(&inst.vid_trans(&f)?)?])
            );
            let rhs = try_eval!(
                t,
                ops.tc(&[inst.vid_hor_cell(&inst.hid_trans(&f)?)?, inst.tau(&f.tgt)?])
            );
            compare(t, lhs, rhs)
        });
    }

    vec![chi_nat, mu_nat, delta_nat, tau_nat]
}

// ---- the twelve interchange coherence conditions ----

pub(super) fn coherence(inst: &dyn InterInstance, config: &CheckConfig) -> Vec<LawReport> {
    let ops = Ops(inst);
    let cells = inst.basic_cells();
    let mut out = Vec::new();

    // C21: interchange of mu with vertical associativity
    let mut c21 = LawReport::new(LawId::Coherence(21));
    {
        let mut rng = config.rng_for(LawId::Coherence(21), 0);
        let verts = inst.vert_arrows();
        let triples = chains_of(&verts, 3, config.budget, &mut rng,
            |v: &VertArrow| v.tgt.clone(), |v| v.src.clone());
        run_law(&mut c21, &triples, config.max_witnesses, |t| {
            let (v, w, x) = three(t);
            let (idv, idw, idx) = (
                try_eval!(t, inst.hid_vert(&v)),
                try_eval!(t, inst.hid_vert(&w)),
                try_eval!(t, inst.hid_vert(&x)),
            );
            let wx = try_eval!(t, inst.v_comp_vert(&w, &x));
            let vw = try_eval!(t, inst.v_comp_vert(&v, &w));
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    ops.vc(&ops.tid(&idv)?, &inst.mu(&w, &x)?)?,
                    inst.mu(&v, &wx)?,
                    inst.hid_vert_cell(&inst.assoc_v_arr(&v, &w, &x)?)?,
                ])
            );
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    inst.assoc_v_cell(&idv, &idw, &idx)?,
                    ops.vc(&inst.mu(&v, &w)?, &ops.tid(&idx)?)?,
                    inst.mu(&vw, &x)?,
                ])
            );
            compare(t, lhs, rhs)
        });
    }
    out.push(c21);

    // C22 / C23: mu against the vertical unit comparisons
    let mut c22 = LawReport::new(LawId::Coherence(22));
    let mut c23 = LawReport::new(LawId::Coherence(23));
    {
        let tuples: Vec<Vec<VertArrow>> = inst.vert_arrows().iter().map(|v| vec![v.clone()]).collect();
        run_law(&mut c22, &tuples, config.max_witnesses, |t| {
            let v = t[0].clone();
            let idv = try_eval!(t, inst.hid_vert(&v));
            let vida = try_eval!(t, inst.vid_obj(&v.src));
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    ops.vc(&inst.tau(&v.src)?, &ops.tid(&idv)?)?,
                    inst.mu(&vida, &v)?,
                    inst.hid_vert_cell(&inst.unit_l_v_arr(&v)?)?,
                ])
            );
            let rhs = try_eval!(t, inst.unit_l_v_cell(&idv));
            compare(t, lhs, rhs)
        });
        run_law(&mut c23, &tuples, config.max_witnesses, |t| {
            let v = t[0].clone();
            let idv = try_eval!(t, inst.hid_vert(&v));
            let vidb = try_eval!(t, inst.vid_obj(&v.tgt));
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    ops.vc(&ops.tid(&idv)?, &inst.tau(&v.tgt)?)?,
                    inst.mu(&v, &vidb)?,
                    inst.hid_vert_cell(&inst.unit_r_v_arr(&v)?)?,
                ])
            );
            let rhs = try_eval!(t, inst.unit_r_v_cell(&idv));
            compare(t, lhs, rhs)
        });
    }
    out.push(c22);
    out.push(c23);

    // C24: interchange associativity (3 rows x 2 cols); both insertion
    // routes for the implicit re-associations are evaluated
    let mut c24 = LawReport::new(LawId::Coherence(24));
    {
        let mut rng = config.rng_for(LawId::Coherence(24), 0);
        let tuples = grids_of(&cells, 3, 2, config.budget, &mut rng);
        run_law(&mut c24, &tuples, config.max_witnesses, |t| {
            let (a, b) = (t[0].clone(), t[1].clone());
            let (c, d) = (t[2].clone(), t[3].clone());
            let (e, f) = (t[4].clone(), t[5].clone());
            let hab = try_eval!(t, ops.hb(&a, &b));
            let hcd = try_eval!(t, ops.hb(&c, &d));
            let hef = try_eval!(t, ops.hb(&e, &f));
            let vce = try_eval!(t, ops.vb(&c, &e));
            let vdf = try_eval!(t, ops.vb(&d, &f));
            let vac = try_eval!(t, ops.vb(&a, &c));
            let vbd = try_eval!(t, ops.vb(&b, &d));
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    ops.vc(&ops.tid(&hab)?, &inst.chi(&c, &d, &e, &f)?)?,
                    inst.chi(&a, &b, &vce, &vdf)?,
                    ops.hc(&inst.assoc_v_cell(&a, &c, &e)?, &inst.assoc_v_cell(&b, &d, &f)?)?,
                ])
            );
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    inst.assoc_v_cell(&hab, &hcd, &hef)?,
                    ops.vc(&inst.chi(&a, &b, &c, &d)?, &ops.tid(&hef)?)?,
                    inst.chi(&vac, &vbd, &e, &f)?,
                ])
            );
            if lhs != rhs {
                return Eval::Compared(false, Witness::new(t, lhs, rhs));
            }
            // alternative insertion via the inverse associators
            let lhs2 = try_eval!(
                t,
                ops.tc(&[
                    ops.vc(&ops.tid(&hab)?, &inst.chi(&c, &d, &e, &f)?)?,
                    inst.chi(&a, &b, &vce, &vdf)?,
                ])
            );
            let rhs2 = try_eval!(
                t,
                ops.tc(&[
                    inst.assoc_v_cell(&hab, &hcd, &hef)?,
                    ops.vc(&inst.chi(&a, &b, &c, &d)?, &ops.tid(&hef)?)?,
                    inst.chi(&vac, &vbd, &e, &f)?,
                    ops.hc(&inst.assoc_v_cell_inv(&a, &c, &e)?, &inst.assoc_v_cell_inv(&b, &d, &f)?)?,
                ])
            );
            compare(t, lhs2, rhs2)
        });
    }
    out.push(c24);

    // C25 / C26: delta against the vertical unit comparisons, through chi
    let mut c25 = LawReport::new(LawId::Coherence(25));
    let mut c26 = LawReport::new(LawId::Coherence(26));
    {
        let mut rng = config.rng_for(LawId::Coherence(25), 0);
        let pairs = grids_of(&cells, 1, 2, config.budget, &mut rng);
        run_law(&mut c25, &pairs, config.max_witnesses, |t| {
            let (a, b) = two(t);
            let (h, k) = (a.top.clone(), b.top.clone());
            let hab = try_eval!(t, ops.hb(&a, &b));
            let idh = try_eval!(t, inst.vid_hor(&h));
            let idk = try_eval!(t, inst.vid_hor(&k));
            let lhs = try_eval!(t, inst.unit_l_v_cell(&hab));
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    ops.vc(&inst.delta(&h, &k)?, &ops.tid(&hab)?)?,
                    inst.chi(&idh, &idk, &a, &b)?,
                    ops.hc(&inst.unit_l_v_cell(&a)?, &inst.unit_l_v_cell(&b)?)?,
                ])
            );
            compare(t, lhs, rhs)
        });
        run_law(&mut c26, &pairs, config.max_witnesses, |t| {
            let (a, b) = two(t);
            let (hb_, kb) = (a.bottom.clone(), b.bottom.clone());
            let hab = try_eval!(t, ops.hb(&a, &b));
            let idh = try_eval!(t, inst.vid_hor(&hb_));
            let idk = try_eval!(t, inst.vid_hor(&kb));
            let lhs = try_eval!(t, inst.unit_r_v_cell(&hab));
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    ops.vc(&ops.tid(&hab)?, &inst.delta(&hb_, &kb)?)?,
                    inst.chi(&a, &b, &idh, &idk)?,
                    ops.hc(&inst.unit_r_v_cell(&a)?, &inst.unit_r_v_cell(&b)?)?,
                ])
            );
            compare(t, lhs, rhs)
        });
    }
    out.push(c25);
    out.push(c26);

    // C27: chi against horizontal associativity (2 rows x 3 cols)
    let mut c27 = LawReport::new(LawId::Coherence(27));
    {
        let mut rng = config.rng_for(LawId::Coherence(27), 0);
        let tuples = grids_of(&cells, 2, 3, config.budget, &mut rng);
        run_law(&mut c27, &tuples, config.max_witnesses, |t| {
            let (a, b, c) = (t[0].clone(), t[1].clone(), t[2].clone());
            let (d, e, f) = (t[3].clone(), t[4].clone(), t[5].clone());
            let hab = try_eval!(t, ops.hb(&a, &b));
            let hde = try_eval!(t, ops.hb(&d, &e));
            let hbc = try_eval!(t, ops.hb(&b, &c));
            let hef = try_eval!(t, ops.hb(&e, &f));
            let vad = try_eval!(t, ops.vb(&a, &d));
            let vbe = try_eval!(t, ops.vb(&b, &e));
            let vcf = try_eval!(t, ops.vb(&c, &f));
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    ops.vc(&inst.assoc_h_cell(&a, &b, &c)?, &inst.assoc_h_cell(&d, &e, &f)?)?,
                    inst.chi(&hab, &c, &hde, &f)?,
                    ops.hc(&inst.chi(&a, &b, &d, &e)?, &ops.tid(&vcf)?)?,
                ])
            );
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    inst.chi(&a, &hbc, &d, &hef)?,
                    ops.hc(&ops.tid(&vad)?, &inst.chi(&b, &c, &e, &f)?)?,
                    inst.assoc_h_cell(&vad, &vbe, &vcf)?,
                ])
            );
            compare(t, lhs, rhs)
        });
    }
    out.push(c27);

    // C28: delta against horizontal associativity
    let mut c28 = LawReport::new(LawId::Coherence(28));
    {
        let mut rng = config.rng_for(LawId::Coherence(28), 0);
        let hors = inst.hor_arrows();
        let triples = chains_of(&hors, 3, config.budget, &mut rng,
            |h: &HorArrow| h.tgt.clone(), |h| h.src.clone());
        run_law(&mut c28, &triples, config.max_witnesses, |t| {
            let (h, k, l) = three(t);
            let (idh, idk, idl) = (
                try_eval!(t, inst.vid_hor(&h)),
                try_eval!(t, inst.vid_hor(&k)),
                try_eval!(t, inst.vid_hor(&l)),
            );
            let kl = try_eval!(t, inst.h_comp_hor(&k, &l));
            let hk = try_eval!(t, inst.h_comp_hor(&h, &k));
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    inst.delta(&h, &kl)?,
                    ops.hc(&ops.tid(&idh)?, &inst.delta(&k, &l)?)?,
                    inst.assoc_h_cell(&idh, &idk, &idl)?,
                ])
            );
            let rhs = try_eval!(
                t,
                ops.tc(&[
                    inst.vid_hor_cell(&inst.assoc_h_arr(&h, &k, &l)?)?,
                    inst.delta(&hk, &l)?,
                    ops.hc(&inst.delta(&h, &k)?, &ops.tid(&idl)?)?,
                ])
            );
            compare(t, lhs, rhs)
        });
    }
    out.push(c28);

    // C29 / C31: chi and mu against the horizontal unit comparisons
    let mut c29 = LawReport::new(LawId::Coherence(29));
    let mut c31 = LawReport::new(LawId::Coherence(31));
    {
        let mut rng = config.rng_for(LawId::Coherence(29), 0);
        let pairs = grids_of(&cells, 2, 1, config.budget, &mut rng);
        run_law(&mut c29, &pairs, config.max_witnesses, |t| {
            let (a, b) = two(t);
            let (v, w) = (a.left.clone(), b.left.clone());
            let vab = try_eval!(t, ops.vb(&a, &b));
            let idv = try_eval!(t, inst.hid_vert(&v));
            let idw = try_eval!(t, inst.hid_vert(&w));
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    inst.chi(&idv, &a, &idw, &b)?,
                    ops.hc(&inst.mu(&v, &w)?, &ops.tid(&vab)?)?,
                    inst.unit_l_h_cell(&vab)?,
                ])
            );
            let rhs = try_eval!(t, ops.vc(&inst.unit_l_h_cell(&a)?, &inst.unit_l_h_cell(&b)?));
            compare(t, lhs, rhs)
        });
        run_law(&mut c31, &pairs, config.max_witnesses, |t| {
            let (a, b) = two(t);
            let (w, wb) = (a.right.clone(), b.right.clone());
            let vab = try_eval!(t, ops.vb(&a, &b));
            let idw = try_eval!(t, inst.hid_vert(&w));
            let idwb = try_eval!(t, inst.hid_vert(&wb));
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    inst.chi(&a, &idw, &b, &idwb)?,
                    ops.hc(&ops.tid(&vab)?, &inst.mu(&w, &wb)?)?,
                    inst.unit_r_h_cell(&vab)?,
                ])
            );
            let rhs = try_eval!(t, ops.vc(&inst.unit_r_h_cell(&a)?, &inst.unit_r_h_cell(&b)?));
            compare(t, lhs, rhs)
        });
    }
    out.push(c29);
    out.push(c31);

    // C30 / C32: delta and tau against the horizontal unit comparisons
    let mut c30 = LawReport::new(LawId::Coherence(30));
    let mut c32 = LawReport::new(LawId::Coherence(32));
    {
        let tuples: Vec<Vec<HorArrow>> = inst.hor_arrows().iter().map(|h| vec![h.clone()]).collect();
        run_law(&mut c30, &tuples, config.max_witnesses, |t| {
            let h = t[0].clone();
            let ida = try_eval!(t, inst.hid_obj(&h.src));
            let idh = try_eval!(t, inst.vid_hor(&h));
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    inst.delta(&ida, &h)?,
                    ops.hc(&inst.tau(&h.src)?, &ops.tid(&idh)?)?,
                    inst.unit_l_h_cell(&idh)?,
                ])
            );
            let rhs = try_eval!(t, inst.vid_hor_cell(&inst.unit_l_h_arr(&h)?));
            compare(t, lhs, rhs)
        });
        run_law(&mut c32, &tuples, config.max_witnesses, |t| {
            let h = t[0].clone();
            let idb = try_eval!(t, inst.hid_obj(&h.tgt));
            let idh = try_eval!(t, inst.vid_hor(&h));
            let lhs = try_eval!(
                t,
                ops.tc(&[
                    inst.delta(&h, &idb)?,
                    ops.hc(&ops.tid(&idh)?, &inst.tau(&h.tgt)?)?,
                    inst.unit_r_h_cell(&idh)?,
                ])
            );
            let rhs = try_eval!(t, inst.vid_hor_cell(&inst.unit_r_h_arr(&h)?));
            compare(t, lhs, rhs)
        });
    }
    out.push(c30);
    out.push(c32);

    out.sort_by_key(|r| r.law);
    out
}
