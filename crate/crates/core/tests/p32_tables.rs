//! Multiplication tables of the coset representatives of `SwAut P32`.

use sigpet::{aut_signed, swaut, Permutation, Petersen, SixType, SwitchingPermutation};

fn base(cycles: &str) -> Permutation {
    let b = Permutation::parse_cycles(5, cycles).unwrap();
    Petersen::get().induced_permutation(&b).unwrap()
}

fn set(s: &str) -> u32 {
    Petersen::get().labeling().parse_set(s).unwrap()
}

fn upsilon() -> SwitchingPermutation {
    SwitchingPermutation::from_set(set("{15,24}"), base("(15)(24)")).unwrap()
}

fn omega() -> SwitchingPermutation {
    SwitchingPermutation::from_set(set("{34,25,13,24}"), base("(145)")).unwrap()
}

/// Parse `[-]u[^(..)] [(..)]`, `[-]w[^(..)] [(..)]` or `id`.
fn element(text: &str) -> SwitchingPermutation {
    let text = text.trim();
    if text == "id" {
        return SwitchingPermutation::identity(10);
    }
    let (negated, text) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (head, tail) = text.split_once(' ').unwrap_or((text, ""));
    let (name, conj) = head.split_once('^').unwrap_or((head, "()"));
    let mut x = match name {
        "u" => upsilon(),
        "w" => omega(),
        other => panic!("unknown representative {other}"),
    };
    if conj != "()" {
        x = x.conjugate_by(&base(conj));
    }
    if negated {
        x = x.negate();
    }
    if !tail.is_empty() {
        x = x.multiply(&SwitchingPermutation::permutation(base(tail)));
    }
    x
}

struct Block {
    rows: &'static [&'static str],
    cols: &'static [&'static str],
    cells: &'static [&'static [&'static str]],
}

const U: &[&str] = &["u", "u^(123)", "u^(321)"];
const W1: &[&str] = &["w", "w^(123)", "w^(321)"];
const W2: &[&str] = &["w^(12)(45)", "w^(23)(45)", "w^(13)(45)"];
const W: &[&str] = &["w", "w^(123)", "w^(321)", "w^(12)(45)", "w^(23)(45)", "w^(13)(45)"];

const BLOCKS: &[Block] = &[
    Block {
        rows: U,
        cols: U,
        cells: &[
            &["id", "w^(321) (123)", "w^(13)(45) (321)"],
            &["w^(12)(45) (321)", "id", "w (123)"],
            &["w^(123) (123)", "w^(23)(45) (321)", "id"],
        ],
    },
    Block {
        rows: U,
        cols: W1,
        cells: &[
            &["w^(12)(45)", "w^(123) (12)(45)", "u^(123) (321)"],
            &["u^(321) (321)", "w^(13)(45)", "w^(321) (23)(45)"],
            &["w (13)(45)", "u (321)", "w^(13)(45)"],
        ],
    },
    Block {
        rows: U,
        cols: W2,
        cells: &[
            &["w", "-w^(23)(45) (12)(45)", "u^(23)(45) (123)"],
            &["-w^(12)(45) (23)(45)", "u (123)", "w"],
            &["u^(13)(45) (123)", "w^(321)", "-w^(13)(45) (13)(45)"],
        ],
    },
    Block {
        rows: W,
        cols: U,
        cells: &[
            &["-w^(12)(45) (12)(45)", "u^(123) (321)", "w^(13)(45)"],
            &["w^(23)(45)", "-w^(13)(45) (23)(45)", "u^(321) (321)"],
            &["u (321)", "w^(12)(45)", "-w^(23)(45) (13)(45)"],
            &["-w (12)(45)", "w^(321)", "u^(321) (123)"],
            &["w^(123)", "u^(123) (123)", "-w^(321) (13)(45)"],
            &["u (123)", "-w^(123) (23)(45)", "w"],
        ],
    },
    Block {
        rows: W,
        cols: W1,
        cells: &[
            &["w^(23)(45)", "u", "-u^(321) (13)(45)"],
            &["-u (12)(45)", "w^(12)(45)", "u^(123)"],
            &["u^(321)", "-u^(123) (23)(45)", "w^(13)(45)"],
            &["-w^(23)(45) (12)(45)", "id", "-w^(13)(45) (23)(45)"],
            &["id", "w^(12)(45) (12)(45)", "w^(13)(45) (13)(45)"],
            &["-w^(23)(45) (13)(45)", "-w^(12)(45) (23)(45)", "id"],
        ],
    },
    Block {
        rows: W,
        cols: W2,
        cells: &[
            &["-w^(123) (12)(45)", "id", "-w^(321) (13)(45)"],
            &["id", "-w (12)(45)", "-w^(321) (23)(45)"],
            &["-w^(123) (23)(45)", "-w (23)(45)", "id"],
            &["w^(123)", "u^(12)(45)", "-u^(13)(45) (23)(45)"],
            &["-u^(12)(45) (12)(45)", "w", "u^(13)(45)"],
            &["u^(12)(45)", "-u^(23)(45) (13)(45)", "w^(321)"],
        ],
    },
];

#[derive(Debug, PartialEq)]
enum Outcome {
    Exact,
    KernelOnly,
    Wrong,
}

fn outcome(row: &str, col: &str, cell: &str) -> Outcome {
    let g = Petersen::get().graph();
    let product = element(row).multiply(&element(col));
    let claimed = element(cell);
    let exact = if cell == "id" {
        product.alpha().is_identity() && (product.set() == 0 || product.set() == 0x3FF)
    } else {
        product == claimed
    };
    if exact {
        Outcome::Exact
    } else if product.equivalent(&claimed, g) {
        Outcome::KernelOnly
    } else {
        Outcome::Wrong
    }
}

const AUT: [&str; 6] = ["()", "(123)", "(321)", "(12)(45)", "(23)(45)", "(13)(45)"];

/// Name `x` as `±r ν` with `r` a representative and `ν ∈ Aut P32`, in the
/// table notation.
fn name(x: &SwitchingPermutation) -> String {
    let full = 0x3FF;
    let mut reps: Vec<(String, SwitchingPermutation)> = vec![("id".into(), SwitchingPermutation::identity(10))];
    for mu in &AUT[..3] {
        reps.push((label("u", mu), element(&label("u", mu))));
    }
    for mu in AUT {
        reps.push((label("w", mu), element(&label("w", mu))));
    }
    for (text, r) in &reps {
        let negated = if x.set() == r.set() {
            false
        } else if x.set() == full & !r.set() {
            true
        } else {
            continue;
        };
        for nu in AUT {
            if r.alpha().then(&base(nu)) == *x.alpha() {
                if text == "id" {
                    return if nu == "()" { "id".into() } else { format!("id {nu}") };
                }
                let sign = if negated { "-" } else { "" };
                return if nu == "()" {
                    format!("{sign}{text}")
                } else {
                    format!("{sign}{text} {nu}")
                };
            }
        }
    }
    panic!("{x} is not ±r ν")
}

fn label(kind: &str, mu: &str) -> String {
    if mu == "()" {
        kind.to_string()
    } else {
        format!("{kind}^{mu}")
    }
}

/// Cells whose printed value is not the product. The last entry is the
/// recomputed value.
const ERRATA: &[(&str, &str, &str, &str)] = &[
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

#[test]
fn representatives_are_switching_automorphisms() {
    let s = SixType::P32.standard();
    assert!(upsilon().fixes(&s).unwrap());
    assert!(omega().fixes(&s).unwrap());
    let aut = aut_signed(&s).unwrap();
    for mu in AUT {
        assert!(aut.contains(&base(mu)), "{mu}");
    }
}

#[test]
fn conjugates_of_w_and_z() {
    let rows = [
        ("(123)", "{25,34}", "(25)(34)", "{14,35,12,34}", "(245)"),
        ("(321)", "{35,14}", "(35)(14)", "{24,15,23,14}", "(345)"),
        ("(12)(45)", "{15,24}", "(15)(24)", "{35,14,23,15}", "(542)"),
        ("(23)(45)", "{14,35}", "(14)(35)", "{25,34,12,35}", "(541)"),
        ("(13)(45)", "{34,25}", "(34)(25)", "{15,24,13,25}", "(543)"),
    ];
    for (mu, ws, wp, zs, zp) in rows {
        let u = upsilon().conjugate_by(&base(mu));
        let w = omega().conjugate_by(&base(mu));
        assert_eq!((u.set(), u.alpha()), (set(ws), &base(wp)), "{mu}");
        assert_eq!((w.set(), w.alpha()), (set(zs), &base(zp)), "{mu}");
    }
}

#[test]
fn multiplication_tables() {
    let mut cells = 0;
    for b in BLOCKS {
        for (r, row) in b.rows.iter().enumerate() {
            for (c, col) in b.cols.iter().enumerate() {
                let cell = b.cells[r][c];
                cells += 1;
                match ERRATA.iter().find(|e| (e.0, e.1) == (*row, *col)) {
                    None => assert_eq!(outcome(row, col, cell), Outcome::Exact, "{row} * {col}"),
                    Some(&(_, _, printed, fixed)) => {
                        assert_eq!(printed, cell);
                        assert_ne!(outcome(row, col, cell), Outcome::Exact);
                        assert_eq!(outcome(row, col, fixed), Outcome::Exact, "{row} * {col}");
                    }
                }
            }
        }
    }
    assert_eq!(cells, 81);
}

#[test]
fn every_product_of_representatives_is_a_representative_times_aut() {
    let mut reps = vec!["id".to_string()];
    reps.extend(AUT[..3].iter().map(|m| label("u", m)));
    reps.extend(AUT.iter().map(|m| label("w", m)));
    for x in &reps {
        for y in &reps {
            name(&element(x).multiply(&element(y)));
        }
    }
}

#[test]
fn worked_examples() {
    assert_eq!(element("w").multiply(&element("w")), element("w^(23)(45)"));
    assert_eq!(element("w").multiply(&element("w^(321)")), element("-u^(321) (13)(45)"));
    assert_eq!(
        element("w^(321)").multiply(&element("w^(123)")),
        element("-u^(123) (23)(45)")
    );
    assert_eq!(element("u").multiply(&element("u^(123)")), element("w^(321) (123)"));
}

#[test]
fn aut_has_no_complement_in_swaut() {
    let s = SixType::P32.standard();
    let g = swaut(&s).unwrap();
    let aut = aut_signed(&s).unwrap();
    let h = aut
        .elements()
        .iter()
        .map(|a| {
            g.index_of(&SwitchingPermutation::permutation(a.clone()).canonical(s.graph()))
                .unwrap()
        })
        .fold(0u128, |acc, i| acc | 1 << i);
    assert!(g.is_subgroup(&(0..g.order()).filter(|i| h >> i & 1 == 1).collect::<Vec<_>>()));
    assert_eq!(h.count_ones(), 6);
    assert!(g.complements(h).unwrap().is_empty());
    // The index-10 subgroups exist; each meets Aut P32 nontrivially.
    let tens = g
        .all_subgroups()
        .unwrap()
        .into_iter()
        .filter(|k| k.count_ones() == 10)
        .count();
    assert_eq!(tens, 6);
}

/// `ζ_{N[v_i5]}(i5)` for `P33`.
fn p33_rep(i: usize) -> SwitchingPermutation {
    let p = Petersen::get();
    let v = p.vertex(i - 1, 4);
    SwitchingPermutation::from_set(p.graph().closed_neighborhood(v), base(&format!("({i}5)"))).unwrap()
}

fn s4() -> Vec<Permutation> {
    Permutation::all(4)
        .into_iter()
        .map(|a| {
            let mut images = a.images().to_vec();
            images.push(4);
            Permutation::from_images(images).unwrap()
        })
        .collect()
}

fn lift(b: &Permutation) -> SwitchingPermutation {
    SwitchingPermutation::permutation(Petersen::get().induced_permutation(b).unwrap())
}

#[test]
fn p33_multiplication_rules() {
    let s = SixType::P33.standard();
    let g = s.graph();
    let at = |b: &Permutation, i: usize| b.apply(i - 1) + 1;
    for i in 1..=4 {
        assert!(p33_rep(i).fixes(&s).unwrap());
    }
    for alpha in s4() {
        let alpha_inv = alpha.inverse();
        for beta in s4() {
            let ab = lift(&alpha.then(&beta));
            for j in 1..=4 {
                let k = at(&alpha_inv, j);
                let left = lift(&alpha).multiply(&p33_rep(j)).multiply(&lift(&beta));
                assert!(left.equivalent(&p33_rep(k).multiply(&ab), g));
                for i in 1..=4 {
                    let product = p33_rep(i)
                        .multiply(&lift(&alpha))
                        .multiply(&p33_rep(j))
                        .multiply(&lift(&beta));
                    let expected = if j == at(&alpha, i) {
                        ab.clone()
                    } else {
                        let cycle = base(&format!("({i}{k}5)"));
                        SwitchingPermutation::from_set(g.closed_neighborhood(Petersen::get().vertex(k - 1, 4)), cycle)
                            .unwrap()
                            .multiply(&ab)
                    };
                    assert!(product.equivalent(&expected, g), "i={i} j={j} alpha={alpha:?}");
                }
            }
        }
    }
}
