//! Non-existence of a totally real parabolic parameter of degree 3 for
//! `z^4 + c`, by a finite computation modulo `2^19`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use serde_json::json;

use super::checks::required_leading_coeff;
use super::CertificateReport;
use crate::capacity::discriminant_upper_bound;
use crate::exact::poly::IntPoly;
use crate::exact::rational::format_rational;
use crate::exact::resultant::discriminant;

const MODULUS_BITS: u32 = 19;
const FORCED_DISC_BITS: u32 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResidueRow {
    pub a0: u64,
    pub u: u64,
    pub v: u64,
    pub delta_mod: u64,
}

/// `256 T^3 + 64 v T^2 + 8 u T + a0`.
fn cubic(a0: u64, u: u64, v: u64) -> IntPoly {
    IntPoly::new(vec![
        BigInt::from(a0),
        BigInt::from(8 * u),
        BigInt::from(64 * v),
        BigInt::from(256),
    ])
}

fn disc_mod(a0: u64, u: u64, v: u64) -> u64 {
    let m = BigInt::one() << MODULUS_BITS;
    discriminant(&cubic(a0, u, v)).unwrap().mod_floor(&m).to_u64().unwrap()
}

/// Terms of the cubic discriminant `b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd`
/// as (coefficient, exponents of a, b, c, d).
const TERMS: [(i64, [u32; 4]); 5] = [
    (1, [0, 2, 2, 0]),
    (-4, [1, 0, 3, 0]),
    (-4, [0, 3, 0, 1]),
    (-27, [2, 0, 0, 2]),
    (18, [1, 1, 1, 1]),
];

/// `nu_2` of each of `a = 2^8`, `b = 2^6 v`, `c = 2^3 u`, `d = a0` ignoring
/// the unknowns, and the number of low bits of `v`, `u`, `a0` fixed by
/// the residue classes.
const SHIFTS: [u32; 4] = [8, 6, 3, 0];
const KNOWN_BITS: [u32; 4] = [u32::MAX, 1, 1, 3];

pub fn cubic_residue_certificate() -> CertificateReport {
    let mut r = CertificateReport::new("cubic_residues");
    let (d, n) = (4u64, 3usize);

    let a3 = required_leading_coeff(d, n);
    r.push(
        "leading coefficient of the minimal polynomial is 2^8",
        "exact: d^(nd/(d-1)) with d = 4, n = 3",
        json!({ "d": d, "n": n }),
        a3 == Some(BigInt::from(256)),
        json!({ "a3": a3.map(|a| a.to_string()) }),
    );

    let slope = BigRational::new(BigInt::from(-8), BigInt::from(3));
    let mut mins = Vec::new();
    for k in 1..=3i64 {
        let bound = BigRational::from_integer(BigInt::from(8)) + &slope * BigInt::from(k);
        mins.push((3 - k, bound.clone(), bound.ceil().to_integer()));
    }
    let ok = mins[0].2 == BigInt::from(6) && mins[1].2 == BigInt::from(3) && mins[2].1 == BigRational::from_integer(0.into());
    r.push(
        "2-adic valuations force a2 = 64v, a1 = 8u and a0 odd",
        "exact: every root has 2-adic valuation -8/3, so nu_2(a_{3-k}) >= 8 - 8k/3, with equality for k = 3",
        json!({ "root_valuation": format_rational(&slope), "nu2_a3": 8 }),
        ok,
        json!(mins
            .iter()
            .map(|(i, b, c)| json!({ "coefficient": format!("a{i}"), "bound": format_rational(b), "min_valuation": c.to_string() }))
            .collect::<Vec<_>>()),
    );

    let a_n = BigInt::from(256);
    let bound = discriminant_upper_bound(&a_n, 4, 3, 256).unwrap();
    let lower = BigInt::one() << FORCED_DISC_BITS;
    let upper_ok = bound.compare_rational(&BigRational::from_integer(BigInt::one() << 17)) == Some(std::cmp::Ordering::Less);
    r.push(
        "discriminant is forced to equal 2^16",
        "certified enclosure: a3^2 | Delta, Delta >= a3^2 = 2^16 and Delta <= 2^28 (2^(1/3) - 1)^6 < 2^17",
        json!({ "a3": "256", "bits": 256 }),
        upper_ok,
        json!({ "lower": lower.to_string(), "upper_enclosure": bound, "multiple_of": lower.to_string() }),
    );

    let mut term_rows = Vec::new();
    let mut depends_ok = true;
    for (coef, exps) in TERMS {
        let shift: u32 = exps.iter().zip(SHIFTS).map(|(e, s)| e * s).sum();
        let nu = shift + BigInt::from(coef).trailing_zeros().unwrap() as u32;
        let need = MODULUS_BITS.saturating_sub(nu);
        let vanishes = need == 0;
        let fixed = vanishes || exps.iter().zip(KNOWN_BITS).all(|(&e, k)| e == 0 || need <= k);
        depends_ok &= fixed;
        term_rows.push(json!({
            "coefficient": coef,
            "exponents_abcd": exps,
            "nu2_constant_part": nu,
            "vanishes_mod_2^19": vanishes,
            "bits_needed": need,
        }));
    }
    r.push(
        "Delta mod 2^19 depends only on a0 mod 8, u mod 2, v mod 2",
        "exact 2-adic bookkeeping per discriminant term",
        json!({ "modulus": "2^19" }),
        depends_ok,
        json!(term_rows),
    );

    let target = 5u64 << FORCED_DISC_BITS;
    let table = residue_table();
    let all = table.iter().all(|row| row.delta_mod == target);
    r.push(
        "Delta = 5 * 2^16 mod 2^19 in all 16 residue classes",
        "exact enumeration of discriminants of representatives",
        json!({ "a0": [1, 3, 5, 7], "u": [0, 1], "v": [0, 1] }),
        all && table.len() == 16,
        json!(table),
    );

    let mut lifts = 0usize;
    let mut lift_ok = true;
    for a0 in (1..16).step_by(2) {
        for u in 0..4 {
            for v in 0..4 {
                lifts += 1;
                lift_ok &= disc_mod(a0, u, v) == disc_mod(a0 % 8, u % 2, v % 2);
            }
        }
    }
    r.push(
        "residues are unchanged for a0 mod 16, u mod 4, v mod 4",
        "exact re-enumeration over lifted representatives",
        json!({ "a0": "odd residues mod 16", "u": [0, 1, 2, 3], "v": [0, 1, 2, 3] }),
        lift_ok,
        json!({ "lifts_checked": lifts }),
    );

    let forced = (1u64 << FORCED_DISC_BITS) % (1 << MODULUS_BITS);
    r.push(
        "no such minimal polynomial exists",
        "2^16 differs from 5 * 2^16 modulo 2^19",
        json!({}),
        forced != target && all,
        json!({ "forced_residue": forced, "actual_residue": target }),
    );
    r
}

pub(crate) fn residue_table() -> Vec<ResidueRow> {
    let mut rows = Vec::new();
    for a0 in [1, 3, 5, 7] {
        for u in 0..2 {
            for v in 0..2 {
                rows.push(ResidueRow {
                    a0,
                    u,
                    v,
                    delta_mod: disc_mod(a0, u, v),
                });
            }
        }
    }
    rows
}
