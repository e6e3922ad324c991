//! OFF mesh export for ideals in three variables.

use std::cmp::Ordering;
use std::fmt::Write;

use num_traits::{One, ToPrimitive, Zero};

use npspread_core::polyhedral::hrep_to_vrep;
use npspread_core::{Constraint, Error, HRep, MonomialIdeal, QVector, Rational};

/// Mesh of `NP(I)` cut off by the box `x_k <= 1 + max vertex coordinate`,
/// followed by the faces of `np(I)`.
pub(crate) fn off(i: &MonomialIdeal) -> Result<String, Error> {
    let big = i.newton_polyhedron()?;
    let small = i.newton_polytope()?;
    let top: Vec<Rational> = (0..3)
        .map(|k| {
            big.vrep
                .vertices
                .iter()
                .map(|v| v[k].clone())
                .max()
                .unwrap_or_else(Rational::zero)
                + Rational::one()
        })
        .collect();
    let mut inequalities = big.hrep.inequalities.clone();
    inequalities.extend((0..3).map(|k| Constraint::new(QVector::unit(3, k), top[k].clone())));
    let boxed = HRep::new(3, big.hrep.equalities.clone(), inequalities)?;
    let corners = hrep_to_vrep(&boxed)?;

    let mut vertices = corners.vertices.clone();
    let mut faces = polygons(&boxed, &corners.vertices, 0);
    faces.extend(polygons(&small.hrep, &small.vrep.vertices, vertices.len()));
    vertices.extend(small.vrep.vertices.iter().cloned());

    let mut out = String::from("OFF\n");
    let _ = writeln!(
        out,
        "# NP(I) for ({i}) cut at ({}), then np(I)",
        top.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
    );
    let _ = writeln!(out, "{} {} 0", vertices.len(), faces.len());
    for v in &vertices {
        let coords: Vec<String> = v.iter().map(decimal).collect();
        let _ = writeln!(out, "{}", coords.join(" "));
    }
    for f in &faces {
        let idx: Vec<String> = f.iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{} {}", f.len(), idx.join(" "));
    }
    Ok(out)
}

fn decimal(r: &Rational) -> String {
    r.to_f64().map_or_else(|| r.to_string(), |x| format!("{x}"))
}

/// Two-dimensional faces as vertex cycles, counterclockwise seen from the
/// outer normal.
fn polygons(h: &HRep, vertices: &[QVector], offset: usize) -> Vec<Vec<usize>> {
    let cycle = |normal: &QVector, members: Vec<usize>| {
        let mut m = members;
        order_around(normal, vertices, &mut m);
        m.into_iter().map(|j| j + offset).collect::<Vec<_>>()
    };
    match h.equalities.len() {
        0 => h
            .inequalities
            .iter()
            .filter_map(|c| {
                let tight: Vec<usize> = (0..vertices.len()).filter(|&j| c.is_tight(&vertices[j])).collect();
                (tight.len() >= 3).then(|| cycle(&c.normal, tight))
            })
            .collect(),
        1 if vertices.len() >= 3 => vec![cycle(&h.equalities[0].normal, (0..vertices.len()).collect())],
        _ => Vec::new(),
    }
}

fn cross(a: &QVector, b: &QVector) -> QVector {
    QVector::new(vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ])
}

/// Sorts coplanar points by angle around their centroid, exactly.
fn order_around(normal: &QVector, vertices: &[QVector], members: &mut [usize]) {
    let count = Rational::from_integer(members.len().into());
    let centroid = members
        .iter()
        .fold(QVector::zeros(3), |acc, &j| acc.add(&vertices[j]))
        .scale(&(Rational::one() / count));
    let start = vertices[members[0]].sub(&centroid);
    let turn = |a: &QVector, b: &QVector| cross(a, b).dot(normal);
    let half = |d: &QVector| {
        let t = turn(&start, d);
        u8::from(!(t > Rational::zero() || (t.is_zero() && start.dot(d) > Rational::zero())))
    };
    members.sort_by(|&x, &y| {
        let dx = vertices[x].sub(&centroid);
        let dy = vertices[y].sub(&centroid);
        half(&dx).cmp(&half(&dy)).then_with(|| {
            let t = turn(&dx, &dy);
            if t > Rational::zero() {
                Ordering::Less
            } else if t < Rational::zero() {
                Ordering::Greater
            } else {
                Ordering::Equal
            }
        })
    });
}
