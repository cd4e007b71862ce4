//! Newton polygons of `φ`-expansions.

use crate::value::{q, Q, Val};

/// A side of a lower convex hull, with `slope = (y_left - y_right) / (s_right - s_left)`
/// so that steeper sides carry larger slopes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Side {
    pub s_left: usize,
    pub s_right: usize,
    pub y_left: Q,
    pub y_right: Q,
    pub slope: Q,
}

impl Side {
    pub fn length(&self) -> usize {
        self.s_right - self.s_left
    }
    /// Value of the supporting line, `y + s λ`.
    pub fn line_value(&self) -> Q {
        self.y_left + self.slope * q(self.s_left as i64)
    }
}

/// Lower convex hull of the finite points `(s, y_s)`, sides left to right.
pub fn lower_hull(points: &[Val]) -> Vec<Side> {
    let pts: Vec<(i64, Q)> = points.iter().enumerate().filter_map(|(s, y)| y.fin().map(|y| (s as i64, y))).collect();
    let mut hull: Vec<(i64, Q)> = vec![];
    for &pt in &pts {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = q(a.0 - o.0) * (pt.1 - o.1) - (a.1 - o.1) * q(pt.0 - o.0);
            if cross <= q(0) {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    hull.windows(2)
        .map(|w| Side {
            s_left: w[0].0 as usize,
            s_right: w[1].0 as usize,
            y_left: w[0].1,
            y_right: w[1].1,
            slope: (w[0].1 - w[1].1) / q(w[1].0 - w[0].0),
        })
        .collect()
}

/// Sides with slope strictly above `lambda_min`: the principal part.
pub fn principal_sides(points: &[Val], lambda_min: Q) -> Vec<Side> {
    lower_hull(points).into_iter().take_while(|s| s.slope > lambda_min).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::qf;

    #[test]
    fn hull_of_degree13_points() {
        // x^13 + ... at p = 5: values 60,56,52,48,36,32,28,24,20,16,12,8,inf,0
        let ys = [60, 56, 52, 48, 36, 32, 28, 24, 20, 16, 12, 8, -1, 0];
        let pts: Vec<Val> = ys.iter().map(|&y| if y < 0 { Val::Inf } else { Val::Fin(q(y)) }).collect();
        let h = lower_hull(&pts);
        let slopes: Vec<(Q, usize)> = h.iter().map(|s| (s.slope, s.length())).collect();
        assert_eq!(slopes, vec![(q(6), 4), (q(4), 9)]);
        assert_eq!(principal_sides(&pts, q(5)).len(), 1);
    }

    #[test]
    fn fractional_slopes() {
        let pts = vec![Val::Fin(q(1)), Val::Fin(q(1)), Val::Fin(q(0))];
        let h = lower_hull(&pts);
        assert_eq!(h.len(), 1);
        assert_eq!(h[0].slope, qf(1, 2));
        assert_eq!(h[0].line_value(), q(1));
    }
}
