//! Explicit graphs, a brute-force distance-regularity oracle and exact
//! spectral cross-checks.

use std::collections::VecDeque;
use std::fmt::Write as _;

use num_rational::BigRational;
use rayon::prelude::*;
use thiserror::Error;

use crate::array::IntersectionArray;
use crate::spectrum::Spectrum;

/// Default vertex cap for graph construction.
pub const DEFAULT_MAX_VERTICES: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph would have {vertices} vertices, above the cap of {cap}")]
    TooLarge { vertices: usize, cap: usize },
    #[error("invalid parameters: {0}")]
    Parameters(String),
}

/// A ±1 matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HadamardMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl HadamardMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, r: usize, c: usize) -> i8 {
        self.entries[r * self.order + c]
    }

    /// Exact check of `H Hᵀ = nI`.
    pub fn is_hadamard(&self) -> bool {
        let n = self.order;
        (0..n).all(|r| {
            (0..n).all(|s| {
                let dot: i64 = (0..n)
                    .map(|c| i64::from(self.get(r, c) * self.get(s, c)))
                    .sum();
                dot == if r == s { n as i64 } else { 0 }
            })
        })
    }
}

/// Sylvester's doubling construction of order `2^k`.
pub fn sylvester_hadamard(k: u32) -> HadamardMatrix {
    let mut h = HadamardMatrix {
        order: 1,
        entries: vec![1],
    };
    for _ in 0..k {
        let n = h.order;
        let mut entries = vec![0i8; 4 * n * n];
        for r in 0..n {
            for c in 0..n {
                let v = h.get(r, c);
                entries[r * 2 * n + c] = v;
                entries[r * 2 * n + c + n] = v;
                entries[(r + n) * 2 * n + c] = v;
                entries[(r + n) * 2 * n + c + n] = -v;
            }
        }
        h = HadamardMatrix {
            order: 2 * n,
            entries,
        };
    }
    debug_assert!(h.is_hadamard());
    h
}

/// A simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphInstance {
    pub labels: Vec<String>,
    pub adjacency: Vec<Vec<usize>>,
    pub provenance: String,
}

/// Graph builders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphKind {
    Hypercube {
        d: u32,
    },
    HalvedCube {
        n: u32,
    },
    FoldedCube {
        n: u32,
    },
    /// Hadamard graph of the Sylvester matrix of order `2^k`.
    Hadamard {
        k: u32,
    },
    Cycle {
        n: usize,
    },
    /// Complement of `K_{k+1} × K_2`.
    TaylorComplement {
        k: usize,
    },
}

impl GraphInstance {
    fn from_edges(labels: Vec<String>, edges: &[(usize, usize)], provenance: String) -> Self {
        let mut adjacency = vec![Vec::new(); labels.len()];
        for &(u, v) in edges {
            if u != v && !adjacency[u].contains(&v) {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for a in &mut adjacency {
            a.sort_unstable();
        }
        GraphInstance {
            labels,
            adjacency,
            provenance,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// A copy with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        let edges: Vec<_> = self.edges().chain(std::iter::once((u, v))).collect();
        Self::from_edges(
            self.labels.clone(),
            &edges,
            format!("{} + edge {u}-{v}", self.provenance),
        )
    }

    /// Line-oriented edge list, one `u v` line per edge, 0-indexed.
    pub fn edge_list(&self) -> String {
        let mut s = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// Dense boolean adjacency matrix.
    pub fn dense(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count();
        let mut m = vec![vec![false; n]; n];
        for (u, v) in self.edges() {
            m[u][v] = true;
            m[v][u] = true;
        }
        m
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// `A·x` over `i128`, `None` on overflow.
    fn apply(&self, x: &[i128]) -> Option<Vec<i128>> {
        self.adjacency
            .iter()
            .map(|nb| nb.iter().try_fold(0i128, |acc, &v| acc.checked_add(x[v])))
            .collect()
    }
}

fn check_cap(vertices: usize, cap: usize) -> Result<(), GraphError> {
    if vertices > cap {
        Err(GraphError::TooLarge { vertices, cap })
    } else {
        Ok(())
    }
}

fn bits(x: usize, len: u32) -> String {
    (0..len)
        .rev()
        .map(|i| if x >> i & 1 == 1 { '1' } else { '0' })
        .collect()
}

/// Builds a graph, refusing anything with more than `cap` vertices.
pub fn build_graph(kind: &GraphKind, cap: usize) -> Result<GraphInstance, GraphError> {
    let pow2 = |e: u32| -> Result<usize, GraphError> {
        1usize
            .checked_shl(e)
            .filter(|_| e < usize::BITS - 1)
            .ok_or(GraphError::TooLarge {
                vertices: usize::MAX,
                cap,
            })
    };
    match *kind {
        GraphKind::Hypercube { d } => {
            if d < 1 {
                return Err(GraphError::Parameters("d must be at least 1".into()));
            }
            let n = pow2(d)?;
            check_cap(n, cap)?;
            let edges: Vec<_> = (0..n)
                .flat_map(|x| (0..d).map(move |i| (x, x ^ (1 << i))))
                .collect();
            let labels = (0..n).map(|x| bits(x, d)).collect();
            Ok(GraphInstance::from_edges(
                labels,
                &edges,
                format!("hypercube d={d}"),
            ))
        }
        GraphKind::HalvedCube { n } => {
            if n < 2 {
                return Err(GraphError::Parameters("n must be at least 2".into()));
            }
            check_cap(pow2(n - 1)?, cap)?;
            let verts: Vec<usize> = (0..pow2(n)?).filter(|x| x.count_ones() % 2 == 0).collect();
            let index = |x: usize| verts.binary_search(&x).expect("even-weight word");
            let mut edges = Vec::new();
            for &x in &verts {
                for i in 0..n {
                    for j in i + 1..n {
                        edges.push((index(x), index(x ^ (1 << i) ^ (1 << j))));
                    }
                }
            }
            let labels = verts.iter().map(|&x| bits(x, n)).collect();
            Ok(GraphInstance::from_edges(
                labels,
                &edges,
                format!("halved cube n={n}"),
            ))
        }
        GraphKind::FoldedCube { n } => {
            if n < 3 {
                return Err(GraphError::Parameters("n must be at least 3".into()));
            }
            // Words of length n−1 represent the classes {x, complement(x)}
            // of length-n words; the extra generator is the all-ones flip.
            let m = n - 1;
            let size = pow2(m)?;
            check_cap(size, cap)?;
            let all = size - 1;
            let edges: Vec<_> = (0..size)
                .flat_map(|x| {
                    (0..m)
                        .map(move |i| (x, x ^ (1 << i)))
                        .chain(std::iter::once((x, x ^ all)))
                })
                .collect();
            let labels = (0..size).map(|x| bits(x, m)).collect();
            Ok(GraphInstance::from_edges(
                labels,
                &edges,
                format!("folded cube n={n}"),
            ))
        }
        GraphKind::Hadamard { k } => {
            let h = sylvester_hadamard(k);
            let order = h.order();
            check_cap(4 * order, cap)?;
            // Vertex (side, index, sign): side 0 = row, 1 = column.
            let id = |side: usize, i: usize, sign: usize| (side * order + i) * 2 + sign;
            let mut labels = vec![String::new(); 4 * order];
            for side in 0..2 {
                for i in 0..order {
                    for sign in 0..2 {
                        let s = if sign == 0 { '+' } else { '-' };
                        let t = if side == 0 { 'r' } else { 'c' };
                        labels[id(side, i, sign)] = format!("{t}{i}{s}");
                    }
                }
            }
            let mut edges = Vec::new();
            for i in 0..order {
                for j in 0..order {
                    for a in 0..2 {
                        for b in 0..2 {
                            let ab: i8 = if a == b { 1 } else { -1 };
                            if h.get(i, j) == ab {
                                edges.push((id(0, i, a), id(1, j, b)));
                            }
                        }
                    }
                }
            }
            Ok(GraphInstance::from_edges(
                labels,
                &edges,
                format!("hadamard sylvester order={order}"),
            ))
        }
        GraphKind::Cycle { n } => {
            if n < 3 {
                return Err(GraphError::Parameters("n must be at least 3".into()));
            }
            check_cap(n, cap)?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            let labels = (0..n).map(|i| i.to_string()).collect();
            Ok(GraphInstance::from_edges(
                labels,
                &edges,
                format!("cycle n={n}"),
            ))
        }
        GraphKind::TaylorComplement { k } => {
            if k < 2 {
                return Err(GraphError::Parameters("k must be at least 2".into()));
            }
            let n = 2 * (k + 1);
            check_cap(n, cap)?;
            let edges: Vec<_> = (0..=k)
                .flat_map(|i| {
                    (0..=k)
                        .filter(move |&j| j != i)
                        .map(move |j| (2 * i, 2 * j + 1))
                })
                .collect();
            let labels = (0..n).map(|v| format!("({},{})", v / 2, v % 2)).collect();
            Ok(GraphInstance::from_edges(
                labels,
                &edges,
                format!("complement of K_{}xK_2", k + 1),
            ))
        }
    }
}

/// Evidence that a graph is not distance-regular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotDrg {
    Disconnected,
    /// Vertices `x`, `y` at distance `h` where `y` has `found` neighbours at
    /// distance `h + offset` from `x` but another pair at distance `h`
    /// gave `expected`.
    Witness {
        x: usize,
        y: usize,
        h: usize,
        offset: i8,
        expected: usize,
        found: usize,
    },
    /// Two vertices have different eccentricities.
    DiameterMismatch {
        x: usize,
        eccentricity: usize,
        expected: usize,
    },
}

/// Per-source counts `(c_h, a_h, b_h)` for each vertex at distance `h`.
fn source_profile(g: &GraphInstance, x: usize) -> Result<Vec<(usize, [usize; 3])>, NotDrg> {
    let dist = g.bfs(x);
    let mut counts: Vec<Option<(usize, [usize; 3])>> = Vec::new();
    for (y, dy) in dist.iter().enumerate() {
        let h = dy.ok_or(NotDrg::Disconnected)?;
        let mut c = [0usize; 3];
        for &z in &g.adjacency[y] {
            let dz = dist[z].expect("connected");
            c[dz + 1 - h] += 1;
        }
        if counts.len() <= h {
            counts.resize(h + 1, None);
        }
        match counts[h] {
            None => counts[h] = Some((y, c)),
            Some((_, prev)) => {
                if let Some(t) = (0..3).find(|&t| prev[t] != c[t]) {
                    return Err(NotDrg::Witness {
                        x,
                        y,
                        h,
                        offset: t as i8 - 1,
                        expected: prev[t],
                        found: c[t],
                    });
                }
            }
        }
    }
    Ok(counts
        .into_iter()
        .map(|c| c.expect("every distance is realized"))
        .collect())
}

/// Certifies distance-regularity by BFS from every vertex and returns the
/// measured intersection array.
pub fn verify_drg(g: &GraphInstance) -> Result<IntersectionArray, NotDrg> {
    if g.vertex_count() == 0 {
        return Err(NotDrg::Disconnected);
    }
    let profiles: Vec<_> = (0..g.vertex_count())
        .into_par_iter()
        .map(|x| source_profile(g, x))
        .collect::<Result<_, _>>()?;
    let reference = &profiles[0];
    for (x, prof) in profiles.iter().enumerate() {
        if prof.len() != reference.len() {
            return Err(NotDrg::DiameterMismatch {
                x,
                eccentricity: prof.len() - 1,
                expected: reference.len() - 1,
            });
        }
        for (h, (&(y, c), &(_, r))) in prof.iter().zip(reference).enumerate() {
            if let Some(t) = (0..3).find(|&t| c[t] != r[t]) {
                return Err(NotDrg::Witness {
                    x,
                    y,
                    h,
                    offset: t as i8 - 1,
                    expected: r[t],
                    found: c[t],
                });
            }
        }
    }
    let d = reference.len() - 1;
    let b = (0..d).map(|h| reference[h].1[2] as i64).collect();
    let c = (1..=d).map(|h| reference[h].1[0] as i64).collect();
    IntersectionArray::new(b, c).map_err(|_| NotDrg::Disconnected)
}

/// Outcome of the exact spectral comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumCheck {
    /// `Π_i (A − θ_i I) = 0`.
    pub annihilates: bool,
    /// `(s, tr(A^s), Σ m_i θ_i^s)` for `s = 1..=2d`.
    pub traces: Vec<(u32, BigRational, Option<BigRational>)>,
    /// Set when intermediate values left the exact `i128` range.
    pub overflow: bool,
}

impl SpectrumCheck {
    pub fn passed(&self) -> bool {
        !self.overflow
            && self.annihilates
            && self.traces.iter().all(|(_, t, e)| e.as_ref() == Some(t))
    }
}

/// Verifies that the minimal polynomial of the spectrum annihilates the
/// adjacency matrix and that the trace moments match, exactly.
pub fn spectrum_crosscheck(g: &GraphInstance, spec: &Spectrum) -> SpectrumCheck {
    let field = spec.field();
    // Π (x − θ_i), expanded over K; its coefficients must be integers.
    let mut poly = vec![field.one()];
    for t in spec.eigenvalues() {
        let mut next = vec![field.zero(); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i + 1] = &next[i + 1] + c;
            next[i] = &next[i] - &(c * t);
        }
        poly = next;
    }
    let coeffs: Option<Vec<i128>> = poly
        .iter()
        .map(|c| {
            c.as_rational()
                .filter(|q| q.is_integer())
                .and_then(|q| i128::try_from(q.to_integer()).ok())
        })
        .collect();
    let n = g.vertex_count();
    let d = spec.diameter() as u32;
    let unit = |v: usize| {
        let mut e = vec![0i128; n];
        e[v] = 1;
        e
    };
    let mut overflow = false;
    let annihilates = match &coeffs {
        None => false,
        Some(coeffs) => {
            let results: Vec<Option<bool>> = (0..n)
                .into_par_iter()
                .map(|v| {
                    // Horner: w = (…((c_m A + c_{m−1})A + …) e_v.
                    let mut w = vec![0i128; n];
                    for c in coeffs.iter().rev() {
                        w = g.apply(&w)?;
                        w[v] = w[v].checked_add(*c)?;
                    }
                    Some(w.iter().all(|&x| x == 0))
                })
                .collect();
            overflow |= results.iter().any(Option::is_none);
            results.iter().all(|r| *r == Some(true))
        }
    };
    let diag: Vec<Option<Vec<i128>>> = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut w = unit(v);
            let mut out = Vec::with_capacity(2 * d as usize);
            for _ in 0..2 * d {
                w = g.apply(&w)?;
                out.push(w[v]);
            }
            Some(out)
        })
        .collect();
    overflow |= diag.iter().any(Option::is_none);
    let traces = (1..=2 * d)
        .map(|s| {
            let tr: i128 = diag
                .iter()
                .flatten()
                .map(|row| row[s as usize - 1])
                .fold(0i128, |a, b| a.saturating_add(b));
            let measured = BigRational::from_integer(tr.into());
            (s, measured, spec.moment(s).as_rational())
        })
        .collect();
    SpectrumCheck {
        annihilates,
        traces,
        overflow,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::parse_array;

    const CAP: usize = DEFAULT_MAX_VERTICES;

    #[test]
    fn sylvester_orders() {
        assert_eq!(sylvester_hadamard(0).entries, vec![1]);
        let h1 = sylvester_hadamard(1);
        assert_eq!(h1.entries, vec![1, 1, 1, -1]);
        assert!(h1.is_hadamard());
        let h3 = sylvester_hadamard(3);
        assert_eq!(h3.order(), 8);
        assert!(h3.is_hadamard());
    }

    #[test]
    fn hypercube_is_distance_regular() {
        let g = build_graph(&GraphKind::Hypercube { d: 4 }, CAP).unwrap();
        assert_eq!(g.vertex_count(), 16);
        assert!(g.adjacency.iter().all(|a| a.len() == 4));
        assert_eq!(verify_drg(&g).unwrap().to_string(), "4,3,2,1;1,2,3,4");
    }

    #[test]
    fn hadamard_graph_order_eight() {
        let g = build_graph(&GraphKind::Hadamard { k: 3 }, CAP).unwrap();
        assert_eq!(g.vertex_count(), 32);
        assert!(g.adjacency.iter().all(|a| a.len() == 8));
        let arr = verify_drg(&g).unwrap();
        assert_eq!(arr.to_string(), "8,7,4,1;1,4,7,8");
        let spec = Spectrum::new(&arr).unwrap();
        assert!(spectrum_crosscheck(&g, &spec).passed());
    }

    #[test]
    fn folded_and_halved_five_cubes() {
        let g = build_graph(&GraphKind::FoldedCube { n: 5 }, CAP).unwrap();
        assert_eq!(g.vertex_count(), 16);
        assert!(g.adjacency.iter().all(|a| a.len() == 5));
        assert_eq!(verify_drg(&g).unwrap().to_string(), "5,4;1,2");
        let h = build_graph(&GraphKind::HalvedCube { n: 5 }, CAP).unwrap();
        assert_eq!(verify_drg(&h).unwrap().to_string(), "10,3;1,6");
    }

    #[test]
    fn mismatched_spectrum_fails() {
        let g = build_graph(&GraphKind::Hypercube { d: 4 }, CAP).unwrap();
        let j84 = Spectrum::new(&parse_array("16,9,4,1;1,4,9,16").unwrap()).unwrap();
        assert!(!spectrum_crosscheck(&g, &j84).passed());
        let own = Spectrum::new(&parse_array("4,3,2,1;1,2,3,4").unwrap()).unwrap();
        assert!(spectrum_crosscheck(&g, &own).passed());
    }

    #[test]
    fn extra_edge_breaks_regularity() {
        let g = build_graph(&GraphKind::Cycle { n: 6 }, CAP).unwrap();
        assert!(matches!(
            verify_drg(&g.with_edge(0, 2)),
            Err(NotDrg::Witness { .. })
        ));
        assert_eq!(g.edge_list().lines().next(), Some("0 1"));
    }

    #[test]
    fn petersen_plus_edge_is_not_distance_regular() {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        let edges: Vec<_> = (0..10)
            .flat_map(|u| (u + 1..10).map(move |v| (u, v)))
            .filter(|&(u, v)| {
                let (a, b) = (pairs[u], pairs[v]);
                a.0 != b.0 && a.0 != b.1 && a.1 != b.0 && a.1 != b.1
            })
            .collect();
        let labels = pairs.iter().map(|p| format!("{p:?}")).collect();
        let petersen = GraphInstance::from_edges(labels, &edges, "petersen".into());
        assert_eq!(verify_drg(&petersen).unwrap().to_string(), "3,2;1,1");
        let (u, v) = (0..10)
            .flat_map(|u| (u + 1..10).map(move |v| (u, v)))
            .find(|&(u, v)| !petersen.is_adjacent(u, v))
            .unwrap();
        assert!(matches!(
            verify_drg(&petersen.with_edge(u, v)),
            Err(NotDrg::Witness { .. })
        ));
    }

    #[test]
    fn taylor_complement_matches_array() {
        for k in 2..=6 {
            let g = build_graph(&GraphKind::TaylorComplement { k }, CAP).unwrap();
            let expected = format!("{k},{},1;1,{},{k}", k - 1, k - 1);
            assert_eq!(verify_drg(&g).unwrap().to_string(), expected);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            build_graph(&GraphKind::Hypercube { d: 13 }, CAP),
            Err(GraphError::TooLarge { vertices: 8192, .. })
        ));
    }
}
