//! Generators for the classical witness objects used throughout the test
//! and certificate pipelines. All generators are deterministic: repeated
//! calls produce identical objects, hence identical serializations.

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Cycle graph with edges `{i, i+1 mod n}`, `n >= 3`.
pub fn generate_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::CycleTooShort { n });
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// The 2-coloring of `K_5` with color 1 on the pentagon edges
/// `{i, i+1 mod 5}` and color 2 on the complement. Both color classes are
/// triangle-free, so the coloring witnesses `R(3,3) > 5`.
pub fn generate_k5_two_coloring() -> EdgeColoring {
    EdgeColoring::from_fn(5, 2, |u, v| {
        let d = (v - u) % 5;
        if d == 1 || d == 4 {
            1
        } else {
            2
        }
    })
    .expect("static construction")
}

/// The 3-coloring of `K_16` over GF(16), realized as polynomials over GF(2)
/// modulo `x^4 + x + 1` with generator `x`. Vertex `v` is the field element
/// with coefficient bits `v`; the edge `{u, v}` gets color
/// `1 + (log(u + v) mod 3)`, i.e. colors index the cubic-residue cosets of
/// the difference. Every color class is 5-regular and triangle-free, so the
/// coloring witnesses `R(3,3,3) > 16`.
pub fn generate_gf16_three_coloring() -> EdgeColoring {
    let log = gf16_log_table();
    EdgeColoring::from_fn(16, 3, |u, v| 1 + log[u ^ v] % 3).expect("static construction")
}

/// Multiplication by `x` in GF(16) with modulus `x^4 + x + 1` (0b10011).
fn gf16_mul_x(a: u8) -> u8 {
    let shifted = a << 1;
    if shifted & 0x10 != 0 {
        (shifted ^ 0x13) & 0x0F
    } else {
        shifted
    }
}

/// Discrete logarithms base `x`: `table[x^e] = e` for `e` in `0..15`.
/// Index 0 is unused (0 has no logarithm).
fn gf16_log_table() -> [u16; 16] {
    let mut table = [0u16; 16];
    let mut value = 1u8;
    for e in 0..15 {
        table[value as usize] = e;
        value = gf16_mul_x(value);
    }
    debug_assert_eq!(value, 1, "x must have multiplicative order 15");
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_of_five() {
        let g = generate_cycle(5).unwrap();
        assert_eq!(g.vertex_count(), 5);
        for v in 0..5 {
            assert_eq!(g.degree(v), 2);
        }
    }

    #[test]
    fn cycle_of_three_is_a_triangle() {
        assert_eq!(generate_cycle(3).unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn cycle_below_three_is_rejected() {
        assert!(matches!(generate_cycle(2), Err(Error::CycleTooShort { n: 2 })));
    }

    #[test]
    fn k5_coloring_shape() {
        let c = generate_k5_two_coloring();
        assert_eq!(c.vertex_count(), 5);
        assert_eq!(c.color_count(), 2);
        assert_eq!(c.color(0, 1), 1);
        assert_eq!(c.color(0, 4), 1);
        assert_eq!(c.color(0, 2), 2);
    }

    #[test]
    fn gf16_log_table_is_a_bijection_on_nonzero() {
        let log = gf16_log_table();
        let mut seen = [false; 15];
        for &e in log.iter().skip(1) {
            let e = e as usize;
            assert!(!seen[e], "exponent {e} repeated");
            seen[e] = true;
        }
    }

    #[test]
    fn gf16_color_classes_are_five_regular() {
        let c = generate_gf16_three_coloring();
        for v in 0..16 {
            let mut per_color = [0usize; 3];
            for u in 0..16 {
                if u != v {
                    per_color[(c.color(u, v) - 1) as usize] += 1;
                }
            }
            assert_eq!(per_color, [5, 5, 5]);
        }
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(generate_k5_two_coloring(), generate_k5_two_coloring());
        assert_eq!(
            generate_gf16_three_coloring(),
            generate_gf16_three_coloring()
        );
        assert_eq!(generate_cycle(7).unwrap(), generate_cycle(7).unwrap());
    }
}
