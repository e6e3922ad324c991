//! Fixed workloads shared by the benchmarks.

use npspread_core::{MonomialIdeal, Ring};

/// Named ideals of increasing size, each with its variable list.
pub const WORKLOADS: &[(&str, &str, &str)] = &[
    ("triangle", "x,y,z", "xy, xz, yz"),
    ("three-vertex", "x,y,z", "xy, y^4z^4, x^4z^4"),
    ("nine-facet", "x,y,z", "x^20, x^8y^2, x^14yz^10, x^2y^10, x^5y^6z^10, y^30, xy^20z^10"),
    ("four-var", "x,y,z,w", "x^3y, y^2z^5, z^3w^2, xw^4, x^2yzw, y^3w"),
    ("two-primary", "x,y,z", "y^2z^2, y^4, xyz^3, x^3z^3"),
];

pub fn workload(name: &str) -> MonomialIdeal {
    let (_, vars, text) = WORKLOADS
        .iter()
        .find(|(n, _, _)| *n == name)
        .unwrap_or_else(|| panic!("unknown workload {name}"));
    let ring = Ring::parse(vars).expect("valid ring");
    MonomialIdeal::parse(&ring, text).expect("valid ideal")
}

pub fn all() -> Vec<(&'static str, MonomialIdeal)> {
    WORKLOADS.iter().map(|(n, _, _)| (*n, workload(n))).collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn workloads_parse() {
        assert_eq!(super::all().len(), super::WORKLOADS.len());
    }
}
