//! Expected table values. Columns follow the class order
//! `+P, P1, P22, P23, P32, P33` unless noted; each constant names the table
//! id it belongs to. Values marked derived are not printed tables: they are
//! consequences of printed values or of the census itself.

/// T1: negative pentagons.
pub const T1_C5: [i64; 6] = [0, 4, 6, 8, 6, 12];
/// T1: negative hexagons.
pub const T1_C6: [i64; 6] = [0, 4, 6, 4, 10, 0];

/// T2: frustration index.
pub const T2_L: [i64; 6] = [0, 1, 2, 2, 3, 3];
/// T3: frustration number.
pub const T3_L0: [i64; 6] = [0, 1, 2, 2, 3, 3];

/// T4: orders and isomorphism types of Aut and SwAut.
pub const T4_AUT_ORDER: [i64; 6] = [120, 8, 2, 8, 6, 24];
pub const T4_AUT_LABEL: [&str; 6] = ["S5", "D4", "Z2", "D4", "S3", "S4"];
pub const T4_SWAUT_ORDER: [i64; 6] = [120, 8, 4, 8, 60, 120];
pub const T4_SWAUT_LABEL: [&str; 6] = ["S5", "D4", "V4", "D4", "A5", "S5"];

/// T5: isomorphic copies of each minimal signature, and switching classes.
pub const T5_COPIES: [i64; 6] = [1, 15, 60, 15, 20, 5];
pub const T5_SWITCHING_CLASSES: [i64; 6] = [1, 15, 30, 15, 2, 1];

/// census: signatures per class (derived, 512 times the switching classes).
pub const CENSUS_SIGNATURES: [i64; 6] = [512, 7680, 15360, 7680, 1024, 512];
pub const CENSUS_TOTAL_SIGNATURES: i64 = 32768;
pub const CENSUS_TOTAL_SWITCHING_CLASSES: i64 = 64;

/// T8: chromatic and zero-free chromatic numbers.
pub const T8_CHI: [i64; 6] = [1, 1, 1, 1, 1, 1];
pub const T8_CHI_STAR: [i64; 6] = [2, 2, 2, 2, 2, 1];

/// T9: `α₀, α₁, α₂` of the signature itself, as printed.
pub const T9_ALPHA: [[i64; 6]; 3] = [[1, 0, 0, 0, 0, 0], [10, 2, 0, 0, 0, 0], [30, 14, 6, 4, 0, 0]];
/// T9: `α₀ + α₁ + α₂` of the negation (derived from the difference and
/// `c₆⁻` rows).
pub const T9_NEG_ALPHA_SUM: [i64; 6] = [0, 4, 6, 16, 0, 41];
/// T9: `χ(3) − 120 = 2Σα_k(−σ) − 4c₆⁻(σ)`.
pub const T9_DIFFERENCE: [i64; 6] = [0, -8, -12, 16, -40, 82];
/// T9: proper 1-colorations (chromatic polynomial at 3).
pub const T9_CHI3: [i64; 6] = [120, 112, 108, 136, 80, 202];

/// T10 columns: each class followed by its negation.
pub const T10_COLUMNS: [&str; 12] = [
    "+P", "-P", "P1", "-P1", "P22", "-P22", "P23", "-P23", "P32", "-P32", "P33", "-P33",
];
/// T10: cluster number, `None` where the signature is inclusterable.
pub const T10_CLUN: [Option<i64>; 12] = [
    Some(1),
    Some(3),
    None,
    Some(3),
    None,
    Some(3),
    None,
    Some(3),
    None,
    Some(4),
    None,
    Some(2),
];
/// T10: inclusterability index.
pub const T10_Q: [i64; 12] = [0, 0, 1, 0, 2, 0, 2, 0, 3, 0, 3, 0];
/// Largest inclusterability index over all signatures of P.
pub const MAX_INCLUSTERABILITY: i64 = 3;

/// Multiplication tables of the coset representatives of `SwAut P32`, as
/// printed. `u` is `υ_W = ζ_{15,24}(15)(24)`, `w` is
/// `ω_Z = ζ_{34,25,13,24}(145)`, `x^(λ)` conjugates by `λ`, a trailing
/// permutation multiplies on the right, and `id` stands for `±ε id`.
/// Each entry is `(row, column, product)`.
pub const P32_PRODUCTS: &[(&str, &str, &str)] = &[
    ("u", "u", "id"),
    ("u", "u^(123)", "w^(321) (123)"),
    ("u", "u^(321)", "w^(13)(45) (321)"),
    ("u^(123)", "u", "w^(12)(45) (321)"),
    ("u^(123)", "u^(123)", "id"),
    ("u^(123)", "u^(321)", "w (123)"),
    ("u^(321)", "u", "w^(123) (123)"),
    ("u^(321)", "u^(123)", "w^(23)(45) (321)"),
    ("u^(321)", "u^(321)", "id"),
    ("u", "w", "w^(12)(45)"),
    ("u", "w^(123)", "w^(123) (12)(45)"),
    ("u", "w^(321)", "u^(123) (321)"),
    ("u^(123)", "w", "u^(321) (321)"),
    ("u^(123)", "w^(123)", "w^(13)(45)"),
    ("u^(123)", "w^(321)", "w^(321) (23)(45)"),
    ("u^(321)", "w", "w (13)(45)"),
    ("u^(321)", "w^(123)", "u (321)"),
    ("u^(321)", "w^(321)", "w^(13)(45)"),
    ("u", "w^(12)(45)", "w"),
    ("u", "w^(23)(45)", "-w^(23)(45) (12)(45)"),
    ("u", "w^(13)(45)", "u^(23)(45) (123)"),
    ("u^(123)", "w^(12)(45)", "-w^(12)(45) (23)(45)"),
    ("u^(123)", "w^(23)(45)", "u (123)"),
    ("u^(123)", "w^(13)(45)", "w"),
    ("u^(321)", "w^(12)(45)", "u^(13)(45) (123)"),
    ("u^(321)", "w^(23)(45)", "w^(321)"),
    ("u^(321)", "w^(13)(45)", "-w^(13)(45) (13)(45)"),
    ("w", "u", "-w^(12)(45) (12)(45)"),
    ("w", "u^(123)", "u^(123) (321)"),
    ("w", "u^(321)", "w^(13)(45)"),
    ("w^(123)", "u", "w^(23)(45)"),
    ("w^(123)", "u^(123)", "-w^(13)(45) (23)(45)"),
    ("w^(123)", "u^(321)", "u^(321) (321)"),
    ("w^(321)", "u", "u (321)"),
    ("w^(321)", "u^(123)", "w^(12)(45)"),
    ("w^(321)", "u^(321)", "-w^(23)(45) (13)(45)"),
    ("w^(12)(45)", "u", "-w (12)(45)"),
    ("w^(12)(45)", "u^(123)", "w^(321)"),
    ("w^(12)(45)", "u^(321)", "u^(321) (123)"),
    ("w^(23)(45)", "u", "w^(123)"),
    ("w^(23)(45)", "u^(123)", "u^(123) (123)"),
    ("w^(23)(45)", "u^(321)", "-w^(321) (13)(45)"),
    ("w^(13)(45)", "u", "u (123)"),
    ("w^(13)(45)", "u^(123)", "-w^(123) (23)(45)"),
    ("w^(13)(45)", "u^(321)", "w"),
    ("w", "w", "w^(23)(45)"),
    ("w", "w^(123)", "u"),
    ("w", "w^(321)", "-u^(321) (13)(45)"),
    ("w^(123)", "w", "-u (12)(45)"),
    ("w^(123)", "w^(123)", "w^(12)(45)"),
    ("w^(123)", "w^(321)", "u^(123)"),
    ("w^(321)", "w", "u^(321)"),
    ("w^(321)", "w^(123)", "-u^(123) (23)(45)"),
    ("w^(321)", "w^(321)", "w^(13)(45)"),
    ("w^(12)(45)", "w", "-w^(23)(45) (12)(45)"),
    ("w^(12)(45)", "w^(123)", "id"),
    ("w^(12)(45)", "w^(321)", "-w^(13)(45) (23)(45)"),
    ("w^(23)(45)", "w", "id"),
    ("w^(23)(45)", "w^(123)", "w^(12)(45) (12)(45)"),
    ("w^(23)(45)", "w^(321)", "w^(13)(45) (13)(45)"),
    ("w^(13)(45)", "w", "-w^(23)(45) (13)(45)"),
    ("w^(13)(45)", "w^(123)", "-w^(12)(45) (23)(45)"),
    ("w^(13)(45)", "w^(321)", "id"),
    ("w", "w^(12)(45)", "-w^(123) (12)(45)"),
    ("w", "w^(23)(45)", "id"),
    ("w", "w^(13)(45)", "-w^(321) (13)(45)"),
    ("w^(123)", "w^(12)(45)", "id"),
    ("w^(123)", "w^(23)(45)", "-w (12)(45)"),
    ("w^(123)", "w^(13)(45)", "-w^(321) (23)(45)"),
    ("w^(321)", "w^(12)(45)", "-w^(123) (23)(45)"),
    ("w^(321)", "w^(23)(45)", "-w (23)(45)"),
    ("w^(321)", "w^(13)(45)", "id"),
    ("w^(12)(45)", "w^(12)(45)", "w^(123)"),
    ("w^(12)(45)", "w^(23)(45)", "u^(12)(45)"),
    ("w^(12)(45)", "w^(13)(45)", "-u^(13)(45) (23)(45)"),
    ("w^(23)(45)", "w^(12)(45)", "-u^(12)(45) (12)(45)"),
    ("w^(23)(45)", "w^(23)(45)", "w"),
    ("w^(23)(45)", "w^(13)(45)", "u^(13)(45)"),
    ("w^(13)(45)", "w^(12)(45)", "u^(12)(45)"),
    ("w^(13)(45)", "w^(23)(45)", "-u^(23)(45) (13)(45)"),
    ("w^(13)(45)", "w^(13)(45)", "w^(321)"),
];

/// Worked products, exact including the sign.
pub const P32_WORKED: &[(&str, &str, &str)] = &[
    ("w", "w", "w^(23)(45)"),
    ("w", "w^(321)", "-u^(321) (13)(45)"),
    ("w^(321)", "w^(123)", "-u^(123) (23)(45)"),
];

/// Printed cells that disagree with the computed product, with the
/// recomputed value `(row, column, printed, computed)`.
pub const P32_ERRATA: &[(&str, &str, &str, &str)] = &[
    ("u^(123)", "u", "w^(12)(45) (321)", "w^(23)(45) (321)"),
    ("u^(321)", "u^(123)", "w^(23)(45) (321)", "w^(12)(45) (321)"),
    ("u", "w^(123)", "w^(123) (12)(45)", "-w^(123) (12)(45)"),
    ("u^(123)", "w^(321)", "w^(321) (23)(45)", "-w^(321) (23)(45)"),
    ("u^(321)", "w", "w (13)(45)", "-w (13)(45)"),
    ("u^(321)", "w^(321)", "w^(13)(45)", "w^(23)(45)"),
    ("u^(123)", "w^(13)(45)", "w", "w^(123)"),
    ("w^(23)(45)", "w^(123)", "w^(12)(45) (12)(45)", "-w^(12)(45) (12)(45)"),
    ("w^(23)(45)", "w^(321)", "w^(13)(45) (13)(45)", "-w^(13)(45) (13)(45)"),
    ("w^(321)", "w^(23)(45)", "-w (23)(45)", "-w (13)(45)"),
    ("w^(23)(45)", "w^(13)(45)", "u^(13)(45)", "u^(321)"),
    ("w^(13)(45)", "w^(12)(45)", "u^(12)(45)", "u^(123)"),
];
