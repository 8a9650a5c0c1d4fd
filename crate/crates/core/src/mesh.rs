//! Internal propagation mesh: the union of all density breakpoints and atom
//! positions, with per-cell density laws and per-node point masses.

use crate::coeffs::{anchor_of, Interval, MeasureCoeff, Problem};
use crate::error::{Error, Result};
use alloc::format;
use alloc::vec::Vec;
use num_traits::Float;

/// Density law on one cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Law {
    Const(f64),
    Power { c: f64, alpha: f64, anchor: f64 },
}

impl Law {
    pub fn density(&self, x: f64) -> f64 {
        match *self {
            Law::Const(c) => c,
            Law::Power { c, alpha, anchor } => c * (x - anchor).abs().powf(alpha),
        }
    }

    pub fn is_const(&self) -> bool {
        matches!(self, Law::Const(_))
    }

    /// Integral of the density over [u, v] inside the law's cell.
    pub fn integral(&self, u: f64, v: f64) -> f64 {
        match *self {
            Law::Const(c) => c * (v - u),
            Law::Power { c, alpha, anchor } => {
                // The cell lies on one side of the anchor.
                let tu = (u - anchor).abs();
                let tv = (v - anchor).abs();
                let (t0, t1) = if tu <= tv { (tu, tv) } else { (tv, tu) };
                if alpha == -1.0 {
                    c * (t1.ln() - t0.ln())
                } else {
                    c * (t1.powf(alpha + 1.0) - t0.powf(alpha + 1.0)) / (alpha + 1.0)
                }
            }
        }
    }
}

/// One mesh cell (open interval between adjacent breakpoints) with the
/// density laws of sigma (s), chi (q) and rho (r) on it.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Cell {
    pub lo: f64,
    pub hi: f64,
    pub s: Law,
    pub q: Law,
    pub r: Law,
}

impl Cell {
    pub fn is_constant(&self) -> bool {
        self.s.is_const() && self.q.is_const() && self.r.is_const()
    }
}

#[derive(Debug)]
pub(crate) struct Mesh {
    pub a: f64,
    pub b: f64,
    /// Interior breakpoints, strictly increasing.
    pub nodes: Vec<f64>,
    /// cells[i] spans (bound[i], bound[i+1]) with bound = [a, nodes.., b].
    pub cells: Vec<Cell>,
    /// Point masses of chi and rho sitting at the nodes.
    pub node_chi: Vec<f64>,
    pub node_rho: Vec<f64>,
}

impl Mesh {
    pub fn build(p: &Problem) -> Result<Self> {
        let iv = p.interval;
        let mut cuts: Vec<f64> = Vec::new();
        for m in [&p.rho, &p.sigma, &p.chi] {
            for s in &m.segments {
                for v in [s.lo, s.hi] {
                    if v.is_finite() && v > iv.a && v < iv.b {
                        cuts.push(v);
                    }
                }
            }
            for a in &m.atoms {
                cuts.push(a.pos);
            }
        }
        cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        cuts.dedup();

        let mut bounds = Vec::with_capacity(cuts.len() + 2);
        bounds.push(iv.a);
        bounds.extend_from_slice(&cuts);
        bounds.push(iv.b);

        let mut cells = Vec::with_capacity(bounds.len() - 1);
        for w in bounds.windows(2) {
            let (lo, hi) = (w[0], w[1]);
            let mid = cell_probe_point(lo, hi);
            let s = law_at(iv, &p.sigma, mid)?;
            let q = law_at(iv, &p.chi, mid)?;
            let r = law_at(iv, &p.rho, mid)?;
            cells.push(Cell { lo, hi, s, q, r });
        }

        let node_chi = cuts.iter().map(|&x| atom_mass(&p.chi, x)).collect();
        let node_rho = cuts.iter().map(|&x| atom_mass(&p.rho, x)).collect();

        Ok(Mesh { a: iv.a, b: iv.b, nodes: cuts, cells, node_chi, node_rho })
    }

    pub fn all_constant(&self) -> bool {
        self.cells.iter().all(|c| c.is_constant())
    }

    /// Index of the cell whose closure contains x.
    pub fn cell_index(&self, x: f64) -> usize {
        let mut i = self.nodes.partition_point(|&n| n < x);
        // A point exactly on a node belongs to the cell to its right for
        // left-continuous bookkeeping; clamp at the last cell.
        if i > 0 && x == self.nodes[i - 1] {
            i -= 1;
        }
        i.min(self.cells.len() - 1)
    }

    pub fn node_at(&self, x: f64) -> Option<usize> {
        self.nodes.iter().position(|&n| n == x)
    }

    /// |rho| mass of the open interval (lo, hi): absolute density integral
    /// plus interior atom masses.
    pub fn abs_rho_mass_open(&self, lo: f64, hi: f64) -> f64 {
        if !(lo < hi) {
            return 0.0;
        }
        let mut total = 0.0;
        for cell in &self.cells {
            let u = cell.lo.max(lo);
            let v = cell.hi.min(hi);
            if u < v && u.is_finite() && v.is_finite() {
                total += cell.r.integral(u, v).abs();
            }
        }
        for (i, &n) in self.nodes.iter().enumerate() {
            if n > lo && n < hi {
                total += self.node_rho[i].abs();
            }
        }
        total
    }
}

fn cell_probe_point(lo: f64, hi: f64) -> f64 {
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) => 0.5 * (lo + hi),
        (true, false) => lo + 1.0,
        (false, true) => hi - 1.0,
        (false, false) => 0.0,
    }
}

fn law_at(iv: Interval, m: &MeasureCoeff, x: f64) -> Result<Law> {
    let seg = m
        .segments
        .iter()
        .find(|s| s.lo <= x && x < s.hi || (x >= s.lo && s.hi == iv.b))
        .ok_or_else(|| Error::InvalidProblem(format!("no segment covers {x}")))?;
    Ok(if seg.exponent == 0.0 {
        Law::Const(seg.coeff)
    } else {
        Law::Power { c: seg.coeff, alpha: seg.exponent, anchor: anchor_of(iv, seg) }
    })
}

fn atom_mass(m: &MeasureCoeff, x: f64) -> f64 {
    m.atoms.iter().find(|a| a.pos == x).map_or(0.0, |a| a.mass)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::{Atom, BoundaryCondition, Segment};
    use alloc::vec;

    #[test]
    fn mesh_layout_and_masses() {
        let iv = Interval::real_line();
        let p = Problem {
            interval: iv,
            rho: MeasureCoeff::atoms_only(
                iv,
                vec![Atom { pos: -1.0, mass: 2.0 }, Atom { pos: 1.5, mass: -0.5 }],
            ),
            sigma: MeasureCoeff::lebesgue_scaled(iv, 1.0),
            chi: MeasureCoeff::lebesgue_scaled(iv, 0.25),
            bc_a: BoundaryCondition::LimitPoint,
            bc_b: BoundaryCondition::LimitPoint,
            gauge_reference: None,
        };
        let m = Mesh::build(&p).unwrap();
        assert_eq!(m.nodes, vec![-1.0, 1.5]);
        assert_eq!(m.cells.len(), 3);
        assert_eq!(m.node_rho, vec![2.0, -0.5]);
        assert_eq!(m.node_chi, vec![0.0, 0.0]);
        assert!(m.all_constant());
        assert_eq!(m.cell_index(-5.0), 0);
        assert_eq!(m.cell_index(0.0), 1);
        assert_eq!(m.cell_index(2.0), 2);
        assert!((m.abs_rho_mass_open(-2.0, 2.0) - 2.5).abs() < 1e-15);
        assert_eq!(m.abs_rho_mass_open(-1.0, 1.5), 0.0);
    }

    #[test]
    fn power_law_integral() {
        // density x^(-0.5) on (0, 1) anchored at 0: integral over (0,1) = 2.
        let law = Law::Power { c: 1.0, alpha: -0.5, anchor: 0.0 };
        assert!((law.integral(0.0, 1.0) - 2.0).abs() < 1e-14);
        let seg_law = Law::Power { c: 2.0, alpha: -1.0, anchor: 0.0 };
        assert!((seg_law.integral(0.25, 0.5) - 2.0 * core::f64::consts::LN_2).abs() < 1e-14);
    }

    #[test]
    fn segment_mesh_splits() {
        let iv = Interval::new(0.0, 1.0);
        let p = Problem {
            interval: iv,
            rho: MeasureCoeff {
                segments: vec![
                    Segment::constant(0.0, 0.25, 0.0),
                    Segment::constant(0.25, 0.75, 1.0),
                    Segment::constant(0.75, 1.0, 0.0),
                ],
                atoms: vec![],
            },
            sigma: MeasureCoeff::lebesgue_scaled(iv, 1.0),
            chi: MeasureCoeff::lebesgue_scaled(iv, 1.0),
            bc_a: BoundaryCondition::RegularAngle(0.4),
            bc_b: BoundaryCondition::RegularAngle(0.4),
            gauge_reference: None,
        };
        let m = Mesh::build(&p).unwrap();
        assert_eq!(m.nodes, vec![0.25, 0.75]);
        assert!((m.abs_rho_mass_open(0.0, 1.0) - 0.5).abs() < 1e-15);
    }
}
