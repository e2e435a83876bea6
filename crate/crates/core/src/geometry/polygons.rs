//! Incidence graphs of generalized 3-, 4- and 6-gons over prime fields.
//!
//! Points are the left class and lines the right class. Lines are listed in
//! lexicographic order of their sorted point-index lists. Every generator
//! re-checks point/line counts, biregularity and girth before returning.

use std::collections::BTreeSet;

use super::field::{PrimeField, ProjectiveSpace};
use super::GeometryError;
use crate::girth::{girth_bipartite, Girth};
use crate::hypergraph::{BipartiteGraph, VertexId};

fn check_range(name: &'static str, q: u32, max: u32) -> Result<PrimeField, GeometryError> {
    let f = PrimeField::new(q)?;
    if q > max {
        return Err(GeometryError::OrderOutOfRange { geometry: name, q, max });
    }
    Ok(f)
}

fn incidence_from_lines(n_points: usize, lines: &BTreeSet<Vec<u32>>) -> BipartiteGraph {
    let incidences = lines
        .iter()
        .enumerate()
        .flat_map(|(j, pts)| pts.iter().map(move |&p| (p, j as VertexId)))
        .collect();
    BipartiteGraph::new(n_points, lines.len(), incidences).expect("lines use valid point ids")
}

fn self_check(
    name: &'static str,
    g: &BipartiteGraph,
    side: usize,
    degree: usize,
    girth: u32,
) -> Result<(), GeometryError> {
    let fail = |what: String| GeometryError::SelfCheck { geometry: name, what };
    if g.n_left() != side || g.n_right() != side {
        return Err(fail(format!(
            "expected {side}+{side} vertices, got {}+{}",
            g.n_left(),
            g.n_right()
        )));
    }
    if g.biregularity() != Some((degree, degree)) {
        return Err(fail(format!("not ({degree},{degree})-biregular")));
    }
    let found = girth_bipartite(g).girth;
    if found != Girth::Finite(girth) {
        return Err(fail(format!("girth {found}, expected {girth}")));
    }
    Ok(())
}

/// Incidence graph of `PG(2, q)`; the Heawood graph for `q = 2`.
pub fn projective_plane(q: u32) -> Result<BipartiteGraph, GeometryError> {
    let f = check_range("plane", q, 13)?;
    let space = ProjectiveSpace::new(f, 3);
    // lines are the dual points: x lies on [a] iff a·x = 0
    let n = space.points.len();
    let lines: BTreeSet<Vec<u32>> = space
        .points
        .iter()
        .map(|a| {
            (0..n as u32)
                .filter(|&i| f.dot(a, &space.points[i as usize]) == 0)
                .collect()
        })
        .collect();
    let g = incidence_from_lines(n, &lines);
    let q = q as usize;
    self_check("plane", &g, q * q + q + 1, q + 1, 6)?;
    Ok(g)
}

/// Incidence graph of the symplectic quadrangle `W(q)`.
///
/// Points are all points of `PG(3, q)`; lines are the lines totally isotropic
/// for `x0 y1 - x1 y0 + x2 y3 - x3 y2`.
pub fn symplectic_quadrangle(q: u32) -> Result<BipartiteGraph, GeometryError> {
    let f = check_range("quadrangle", q, 7)?;
    let space = ProjectiveSpace::new(f, 4);
    let form = |x: &[u32], y: &[u32]| {
        let a = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
        let b = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
        f.add(a, b)
    };
    let n = space.points.len();
    let mut lines = BTreeSet::new();
    for a in 0..n {
        for b in a + 1..n {
            if form(&space.points[a], &space.points[b]) == 0 {
                lines.insert(space.line_through(a, b));
            }
        }
    }
    let g = incidence_from_lines(n, &lines);
    let q = q as usize;
    self_check("quadrangle", &g, (q + 1) * (q * q + 1), q + 1, 8)?;
    Ok(g)
}

/// Incidence graph of the split Cayley hexagon `H(q)`.
///
/// Points are the points of the parabolic quadric
/// `X0 X4 + X1 X5 + X2 X6 = X3^2` in `PG(6, q)`. Lines are the quadric's
/// lines whose Grassmann coordinates `p_ij = x_i y_j - x_j y_i` satisfy
///
/// ```text
/// p12 = p34, p54 = p32, p20 = p35, p65 = p30, p01 = p36, p46 = p31
/// ```
///
/// Quadric lines are found by scanning point pairs with vanishing polar form.
pub fn split_cayley_hexagon(q: u32) -> Result<BipartiteGraph, GeometryError> {
    let f = check_range("hexagon", q, 7)?;
    let space = ProjectiveSpace::new(f, 7);
    let quad = |x: &[u32]| {
        let s = f.add(
            f.add(f.mul(x[0], x[4]), f.mul(x[1], x[5])),
            f.mul(x[2], x[6]),
        );
        f.sub(s, f.mul(x[3], x[3]))
    };
    // B(x, y) = Q(x + y) - Q(x) - Q(y)
    let polar = |x: &[u32], y: &[u32]| {
        let mixed = |i: usize, j: usize| f.add(f.mul(x[i], y[j]), f.mul(x[j], y[i]));
        let s = f.add(f.add(mixed(0, 4), mixed(1, 5)), mixed(2, 6));
        f.sub(s, f.mul(2 % q, f.mul(x[3], y[3])))
    };
    let grassmann = |x: &[u32], y: &[u32], i: usize, j: usize| {
        f.sub(f.mul(x[i], y[j]), f.mul(x[j], y[i]))
    };
    let on_hexagon = |x: &[u32], y: &[u32]| {
        let p = |i, j| grassmann(x, y, i, j);
        p(1, 2) == p(3, 4)
            && p(5, 4) == p(3, 2)
            && p(2, 0) == p(3, 5)
            && p(6, 5) == p(3, 0)
            && p(0, 1) == p(3, 6)
            && p(4, 6) == p(3, 1)
    };

    let quadric: Vec<&Vec<u32>> = space.points.iter().filter(|x| quad(x) == 0).collect();
    let mut lines = BTreeSet::new();
    for a in 0..quadric.len() {
        for b in a + 1..quadric.len() {
            let (x, y) = (quadric[a], quadric[b]);
            if polar(x, y) == 0 && on_hexagon(x, y) {
                lines.insert(line_in(&space, f, x, y, &quadric));
            }
        }
    }
    let g = incidence_from_lines(quadric.len(), &lines);
    let q = q as usize;
    self_check("hexagon", &g, (q + 1) * (q.pow(4) + q * q + 1), q + 1, 12)?;
    Ok(g)
}

/// Points of the line `xy`, as sorted indices into `quadric`.
fn line_in(
    space: &ProjectiveSpace,
    f: PrimeField,
    x: &[u32],
    y: &[u32],
    quadric: &[&Vec<u32>],
) -> Vec<u32> {
    let find = |v: &[u32]| {
        let n = space.normalize(v).expect("nonzero");
        quadric
            .binary_search_by(|p| p.as_slice().cmp(n.as_slice()))
            .expect("line lies on the quadric") as u32
    };
    let mut pts = vec![find(x)];
    for t in 0..f.order() {
        let v: Vec<u32> = y.iter().zip(x).map(|(&b, &a)| f.add(b, f.mul(t, a))).collect();
        pts.push(find(&v));
    }
    pts.sort_unstable();
    pts
}
