use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::exactnum::{MultiPoly, Slope};

/// Convex hull of the exponent support `(e_L, e_M)`, corners in
/// counterclockwise order starting from the lowest, then leftmost, point.
/// Support points in the relative interior of an edge are not corners.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NewtonPolygon {
    pub corners: Vec<(i64, i64)>,
}

/// Which exponent goes on the horizontal axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Axes {
    /// Slope `Δe_M / Δe_L`.
    #[default]
    LM,
    /// Slope `Δe_L / Δe_M`.
    ML,
}

/// How edge directions are read as boundary slopes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SlopeConvention {
    pub axes: Axes,
    pub negate: bool,
    pub half: bool,
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i128 {
    let (ax, ay) = ((a.0 - o.0) as i128, (a.1 - o.1) as i128);
    let (bx, by) = ((b.0 - o.0) as i128, (b.1 - o.1) as i128);
    ax * by - ay * bx
}

/// Strictly convex hull (monotone chain), counterclockwise.
pub fn convex_hull(points: &[(i64, i64)]) -> Vec<(i64, i64)> {
    let mut pts: Vec<(i64, i64)> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        pts.sort_by_key(|&(x, y)| (y, x));
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // rotate so the lowest, then leftmost, corner comes first
    let start = (0..lower.len()).min_by_key(|&i| (lower[i].1, lower[i].0)).expect("nonempty");
    lower.rotate_left(start);
    lower
}

/// Newton polygon of a polynomial in `L` and `M`.
pub fn newton_polygon(poly: &MultiPoly) -> NewtonPolygon {
    let vars = poly.vars();
    let li = vars.iter().position(|v| v == "L");
    let mi = vars.iter().position(|v| v == "M");
    let support: Vec<(i64, i64)> = poly
        .terms()
        .map(|(e, _)| {
            let get = |i: Option<usize>| i.map_or(0, |i| e[i] as i64);
            (get(li), get(mi))
        })
        .collect();
    NewtonPolygon { corners: convex_hull(&support) }
}

impl NewtonPolygon {
    /// Edges as consecutive corner pairs, closing the loop.
    pub fn edges(&self) -> Vec<((i64, i64), (i64, i64))> {
        let n = self.corners.len();
        match n {
            0 | 1 => Vec::new(),
            2 => alloc::vec![(self.corners[0], self.corners[1])],
            _ => (0..n).map(|i| (self.corners[i], self.corners[(i + 1) % n])).collect(),
        }
    }
}

/// Slopes of the polygon's edges under `convention`; empty for a point.
pub fn edge_slopes(np: &NewtonPolygon, convention: &SlopeConvention) -> BTreeSet<Slope> {
    np.edges()
        .into_iter()
        .map(|(a, b)| {
            let (dl, dm) = (b.0 - a.0, b.1 - a.1);
            let (num, den) = match convention.axes {
                Axes::LM => (dm, dl),
                Axes::ML => (dl, dm),
            };
            let num = if convention.negate { -num } else { num };
            let den = if convention.half { 2 * den } else { den };
            Slope::from_ratio(num, den)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn slopes(corners: &[(i64, i64)], c: SlopeConvention) -> BTreeSet<Slope> {
        edge_slopes(&NewtonPolygon { corners: convex_hull(corners) }, &c)
    }

    #[test]
    fn hull_examples() {
        assert_eq!(convex_hull(&[(0, 0), (1, 0), (0, 1), (1, 1)]), vec![(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(convex_hull(&[(0, 0), (2, 0), (0, 2), (1, 1)]), vec![(0, 0), (2, 0), (0, 2)]);
        assert_eq!(convex_hull(&[(0, 0), (1, 0), (2, 0)]), vec![(0, 0), (2, 0)]);
        assert_eq!(convex_hull(&[(3, 3)]), vec![(3, 3)]);
    }

    #[test]
    fn slope_examples() {
        let d = SlopeConvention::default();
        let s = slopes(&[(0, 14), (1, 14), (1, 0), (2, 0)], d);
        assert_eq!(s, [Slope::integer(0), Slope::integer(-14)].into_iter().collect());
        let s = slopes(&[(0, 0), (1, 0), (0, 1), (1, 1)], d);
        assert_eq!(s, [Slope::integer(0), Slope::Infinite].into_iter().collect());
        assert!(slopes(&[(2, 5)], d).is_empty());
        let flipped = SlopeConvention { axes: Axes::ML, negate: true, half: true };
        let s = slopes(&[(0, 14), (1, 14), (1, 0), (2, 0)], flipped);
        assert_eq!(s, [Slope::Infinite, Slope::from_ratio(1, 28)].into_iter().collect());
    }

    #[test]
    fn figure_eight_polygon() {
        let f = MultiPoly::from_terms(
            &["L", "M"],
            [
                (vec![2, 4], 1),
                (vec![1, 8], -1),
                (vec![1, 6], 1),
                (vec![1, 4], 2),
                (vec![1, 2], 1),
                (vec![1, 0], -1),
                (vec![0, 4], 1),
            ],
        );
        let np = newton_polygon(&f);
        assert_eq!(np.corners, vec![(1, 0), (2, 4), (1, 8), (0, 4)]);
        let s = edge_slopes(&np, &SlopeConvention::default());
        assert_eq!(s, [Slope::integer(-4), Slope::integer(4)].into_iter().collect());
    }
}
