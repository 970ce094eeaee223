//! Constructors for paths, saw-graphs `S(p,q;l)` and the hypertrees
//! `T(n,a,b)`, with a published vertex-id layout.
//!
//! Layout contract for `t_hypertree`: the path vertices `v_1..v_ell`
//! (`ell = n - a - b`) receive ids `0..ell-1` in path order, and the pendant
//! `w_i` vertices are appended in increasing edge-index order. `saw_graph`
//! uses the same layout (path first, apexes appended), so the 2-section of
//! `T(n,a,b)` equals `S(a,b;n-2(a+b)-1)` as an edge set, not merely up to
//! isomorphism.

use crate::enumerate::canonical_form;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

/// Validated parameters for the hypertree family `T(n,a,b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HypertreeParams {
    n: usize,
    a: usize,
    b: usize,
}

impl HypertreeParams {
    /// Requires `0 <= a <= b` and `a + b <= floor((n-1)/2)`.
    pub fn new(n: usize, a: usize, b: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("order must be positive".into()));
        }
        if a > b {
            return Err(Error::InvalidParams(format!("need a <= b, got a={a}, b={b}")));
        }
        if a + b > (n - 1) / 2 {
            return Err(Error::InvalidParams(format!(
                "need a + b <= floor((n-1)/2), got a+b={} for n={n}",
                a + b
            )));
        }
        Ok(HypertreeParams { n, a, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Order of the underlying path: `ell = n - a - b`.
    pub fn ell(&self) -> usize {
        self.n - self.a - self.b
    }

    /// Length of the run of 2-edges between the two saw blocks:
    /// `r = ell - b - a`.
    pub fn r(&self) -> usize {
        self.ell() - self.a - self.b
    }

    /// `floor(ell / 2)`.
    pub fn p(&self) -> usize {
        self.ell() / 2
    }

    /// `ceil(ell / 2)`.
    pub fn p1(&self) -> usize {
        self.ell().div_ceil(2)
    }

    /// Vertex id of `v_i` for the 1-based path index `i`.
    pub fn v_id(&self, i: usize) -> usize {
        assert!(i >= 1 && i <= self.ell(), "v index {i} outside 1..={}", self.ell());
        i - 1
    }

    /// True iff path edge `e_i` carries a pendant vertex `w_i`.
    pub fn has_w(&self, i: usize) -> bool {
        let ell = self.ell();
        (i >= 1 && i <= self.a) || (i + self.b >= ell && i < ell)
    }

    /// Vertex id of the pendant vertex `w_i`, if edge `e_i` has one.
    pub fn w_id(&self, i: usize) -> Option<usize> {
        let ell = self.ell();
        if i >= 1 && i <= self.a {
            Some(ell + i - 1)
        } else if i + self.b >= ell && i < ell {
            Some(ell + self.a + i - (ell - self.b))
        } else {
            None
        }
    }

    /// Edge index (into the constructed hypergraph) of the path edge `e_i`.
    pub fn edge_index(&self, i: usize) -> usize {
        assert!(i >= 1 && i < self.ell());
        i - 1
    }
}

/// Validated parameters for the saw-graph family `S(p,q;l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SawParams {
    p: usize,
    q: usize,
    ell: usize,
}

impl SawParams {
    pub fn new(p: usize, q: usize, ell: usize) -> Result<Self> {
        let order = 2 * p + 2 * q + ell + 1;
        if order < 2 {
            return Err(Error::InvalidParams(
                "saw-graph order 2p+2q+l+1 must be at least 2".into(),
            ));
        }
        Ok(SawParams { p, q, ell })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Number of vertices: `2p + 2q + l + 1`.
    pub fn order(&self) -> usize {
        2 * self.p + 2 * self.q + self.ell + 1
    }

    /// Saw length `k = p + q`, the number of triangles.
    pub fn k(&self) -> usize {
        self.p + self.q
    }
}

/// The ordinary path on `n` vertices: edges `{i, i+1}`.
pub fn path(n: usize) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::InvalidParams("path order must be positive".into()));
    }
    Hypergraph::new(n, (1..n).map(|i| vec![i - 1, i]).collect())
}

/// The hypertree `T(n,a,b)`: a path `v_1..v_ell` whose first `a` and last
/// `b` edges are enlarged with one pendant vertex each.
pub fn t_hypertree(params: &HypertreeParams) -> Hypergraph {
    let ell = params.ell();
    let mut edges = Vec::with_capacity(ell.saturating_sub(1));
    for i in 1..ell {
        let mut e = vec![params.v_id(i), params.v_id(i + 1)];
        if let Some(w) = params.w_id(i) {
            e.push(w);
        }
        edges.push(e);
    }
    Hypergraph::new(params.n(), edges).expect("family construction is valid")
}

/// The saw-graph `S(p,q;l)`: a path whose first `p` and last `q` edges are
/// replaced by triangles (base edge kept, apex added).
pub fn saw_graph(params: &SawParams) -> Hypergraph {
    let path_order = params.p() + params.q() + params.ell() + 1;
    let mut edges = Vec::new();
    let mut next_apex = path_order;
    let mut apex_edges = Vec::new();
    for i in 1..path_order {
        edges.push(vec![i - 1, i]);
        let leading = i <= params.p();
        let trailing = i + params.q() >= path_order && i < path_order;
        if leading || trailing {
            apex_edges.push(vec![i - 1, next_apex]);
            apex_edges.push(vec![i, next_apex]);
            next_apex += 1;
        }
    }
    edges.extend(apex_edges);
    debug_assert_eq!(next_apex, params.order());
    Hypergraph::new(params.order(), edges).expect("family construction is valid")
}

/// Saw parameters matching the 2-section of `T(n,a,b)`:
/// `S(a, b; n - 2(a+b) - 1)`.
pub fn saw_of_hypertree(params: &HypertreeParams) -> SawParams {
    SawParams::new(params.a(), params.b(), params.n() - 2 * (params.a() + params.b()) - 1)
        .expect("derived saw parameters are valid")
}

/// True iff the 2-section of `T(n,a,b)` is isomorphic to
/// `S(a,b;n-2(a+b)-1)`, decided by canonical-form equality.
pub fn check_o_correspondence(params: &HypertreeParams) -> bool {
    let two_sec = t_hypertree(params).two_section();
    let saw = saw_graph(&saw_of_hypertree(params));
    canonical_form(&two_sec) == canonical_form(&saw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{spectral_radius, DEFAULT_TOL};
    use std::collections::BTreeSet;

    #[test]
    fn path_construction() {
        assert!(path(0).is_err());
        assert_eq!(path(1).unwrap().edge_count(), 0);
        assert_eq!(path(2).unwrap().edges(), &[vec![0, 1]]);
        let p4 = path(4).unwrap();
        assert_eq!(p4.edges(), &[vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(p4.two_section().edge_set(), p4.edge_set());
    }

    #[test]
    fn params_validation() {
        assert!(HypertreeParams::new(7, 1, 1).is_ok());
        assert!(HypertreeParams::new(7, 2, 1).is_err());
        assert!(HypertreeParams::new(7, 1, 3).is_err());
        assert!(HypertreeParams::new(0, 0, 0).is_err());
        assert!(SawParams::new(0, 0, 0).is_err());
        assert!(SawParams::new(0, 0, 1).is_ok());
    }

    #[test]
    fn t711_layout() {
        let params = HypertreeParams::new(7, 1, 1).unwrap();
        assert_eq!(params.ell(), 5);
        let t = t_hypertree(&params);
        assert_eq!(
            t.edges(),
            &[vec![0, 1, 5], vec![1, 2], vec![2, 3], vec![3, 4, 6]]
        );
        let slack: usize = t.edges().iter().map(|e| e.len() - 1).sum();
        assert_eq!(slack, 6);
        assert!(t.is_hypertree());
        assert_eq!(t.degree(params.v_id(2)).unwrap(), 2);
        assert_eq!(
            t.pendant_edges(),
            vec![(0, params.v_id(2)), (3, params.v_id(4))]
        );
        // w_1 and w_4 sit four steps apart
        let d = t.distance_matrix().unwrap();
        assert_eq!(d.get(params.w_id(1).unwrap(), params.w_id(4).unwrap()), 4);
    }

    #[test]
    fn t502_trailing_indices() {
        let params = HypertreeParams::new(5, 0, 2).unwrap();
        assert_eq!(params.ell(), 3);
        let t = t_hypertree(&params);
        assert_eq!(t.edges(), &[vec![0, 1, 3], vec![1, 2, 4]]);
    }

    #[test]
    fn family_members_are_hypertrees() {
        for n in 1..=12usize {
            for a in 0..=n {
                for b in a..=n {
                    let Ok(params) = HypertreeParams::new(n, a, b) else {
                        continue;
                    };
                    let t = t_hypertree(&params);
                    assert!(t.is_hypertree(), "T({n},{a},{b}) not a hypertree");
                    assert!(t.rank() <= 3);
                    let triples = t.edges().iter().filter(|e| e.len() == 3).count();
                    assert_eq!(triples, a + b);
                    let max_deg = (0..t.order())
                        .map(|u| t.degree(u).unwrap())
                        .max()
                        .unwrap();
                    assert!(max_deg <= 2);
                }
            }
        }
    }

    #[test]
    fn saw_special_cases() {
        // S(0,0;n-1) is the path P_n
        for n in 2..=8usize {
            let s = saw_graph(&SawParams::new(0, 0, n - 1).unwrap());
            assert_eq!(s.edge_set(), path(n).unwrap().edge_set());
        }
        // S(0,1;n-3) has order n and exactly one triangle
        for n in 4..=8usize {
            let params = SawParams::new(0, 1, n - 3).unwrap();
            assert_eq!(params.order(), n);
            let s = saw_graph(&params);
            assert_eq!(s.edge_count(), (n - 2) + 2);
        }
        let s112 = SawParams::new(1, 1, 2).unwrap();
        assert_eq!(s112.order(), 7);
        let g = saw_graph(&s112);
        assert_eq!(g.order(), 7);
        assert_eq!(g.edge_count(), 8);
        // S(p,q;0) is the proper saw-graph of length p+q
        let proper = saw_graph(&SawParams::new(2, 1, 0).unwrap());
        assert_eq!(proper.order(), 7);
        assert_eq!(proper.edge_count(), 3 + 6);
    }

    #[test]
    fn two_section_equals_saw_edge_set() {
        for n in 2..=11usize {
            for a in 0..=n {
                for b in a..=n {
                    let Ok(params) = HypertreeParams::new(n, a, b) else {
                        continue;
                    };
                    let two_sec = t_hypertree(&params).two_section();
                    let saw = saw_graph(&saw_of_hypertree(&params));
                    assert_eq!(
                        two_sec.edge_set(),
                        saw.edge_set(),
                        "layout mismatch for T({n},{a},{b})"
                    );
                }
            }
        }
    }

    #[test]
    fn o_correspondence_spot_checks() {
        assert!(check_o_correspondence(&HypertreeParams::new(7, 1, 1).unwrap()));
        for n in 2..=9usize {
            assert!(check_o_correspondence(&HypertreeParams::new(n, 0, 0).unwrap()));
        }
    }

    #[test]
    fn hypertree_and_saw_share_rho() {
        let params = HypertreeParams::new(7, 1, 1).unwrap();
        let dt = t_hypertree(&params).distance_matrix().unwrap();
        let ds = saw_graph(&saw_of_hypertree(&params))
            .distance_matrix()
            .unwrap();
        assert_eq!(dt, ds);
        let rt = spectral_radius(&dt, DEFAULT_TOL).unwrap();
        let rs = spectral_radius(&ds, DEFAULT_TOL).unwrap();
        assert!((rt.rho - rs.rho).abs() < 1e-9);
    }

    #[test]
    fn saw_cycle_census() {
        // every saw-graph is a cactus whose cycles are all triangles
        for (p, q, ell) in [(1usize, 1, 2), (2, 1, 0), (0, 2, 3), (2, 2, 1)] {
            let params = SawParams::new(p, q, ell).unwrap();
            let g = saw_graph(&params);
            let n = g.order();
            let m = g.edge_count();
            assert_eq!(m, n - 1 + params.k(), "cycle space dimension");
            // each apex vertex closes exactly one triangle
            let apexes: BTreeSet<usize> = (params.p() + params.q() + params.ell() + 1..n).collect();
            assert_eq!(apexes.len(), params.k());
            for &u in &apexes {
                let nb = g.neighbors(u).unwrap();
                assert_eq!(nb.len(), 2);
                assert!(g.are_adjacent(nb[0], nb[1]));
            }
        }
    }
}
