//! Face-associated subspaces and computational basis assembly.
//!
//! The building blocks are small families of explicitly listed forms
//! (`V`, `E_i`, `F_i`, `I_i` and their tilde/hat/tensor variants), each
//! element of which has nonzero trace on exactly one face of the cube at
//! the dimension where it first shows up. Computational bases for
//! `Q^-_r Λ^k`, `S_r Λ^k`, and `S^-_r Λ^k` are unions of these subspaces
//! over kind-specific grade ranges.

use crate::error::BasisError;
use crate::face::{faces_of_cube, min_trace_dim, Face};
use crate::form::{Alternator, DifferentialForm};
use crate::poly::Polynomial;
use std::fmt;
use std::str::FromStr;

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;
const SIGNS: [i8; 2] = [1, -1];

/// The three element families.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    QMinus,
    S,
    SMinus,
}

impl Family {
    pub fn token(&self) -> &'static str {
        match self {
            Family::QMinus => "q-",
            Family::S => "s",
            Family::SMinus => "s-",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "q-" | "qminus" => Ok(Family::QMinus),
            "s" => Ok(Family::S),
            "s-" | "sminus" => Ok(Family::SMinus),
            other => Err(format!("unknown family {other:?} (expected q-, s, or s-)")),
        }
    }
}

/// A concrete finite element space: family, polynomial order, form order,
/// ambient dimension.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FamilyId {
    pub family: Family,
    pub r: u32,
    pub k: usize,
    pub n: usize,
}

impl FamilyId {
    pub fn new(family: Family, r: u32, k: usize, n: usize) -> Self {
        FamilyId { family, r, k, n }
    }

    fn validate(&self) -> Result<(), BasisError> {
        if self.n != 2 && self.n != 3 {
            return Err(BasisError::BadAmbient(self.n));
        }
        if self.k > self.n {
            return Err(BasisError::BadFormOrder {
                k: self.k,
                n: self.n,
            });
        }
        if self.r < 1 {
            return Err(BasisError::OrderTooSmall(self.r));
        }
        Ok(())
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} r={} k={} n={}", self.family, self.r, self.k, self.n)
    }
}

/// The ten subspace shapes used by the tables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SubspaceKind {
    V,
    E,
    ETilde,
    F,
    FHat,
    FTilde,
    FTensor,
    I,
    ITilde,
    ITensor,
}

impl SubspaceKind {
    pub fn token(&self) -> &'static str {
        match self {
            SubspaceKind::V => "V",
            SubspaceKind::E => "E",
            SubspaceKind::ETilde => "E_tilde",
            SubspaceKind::F => "F",
            SubspaceKind::FHat => "F_hat",
            SubspaceKind::FTilde => "F_tilde",
            SubspaceKind::FTensor => "F_tensor",
            SubspaceKind::I => "I",
            SubspaceKind::ITilde => "I_tilde",
            SubspaceKind::ITensor => "I_tensor",
        }
    }

    pub fn from_token(s: &str) -> Option<Self> {
        Some(match s {
            "V" => SubspaceKind::V,
            "E" => SubspaceKind::E,
            "E_tilde" => SubspaceKind::ETilde,
            "F" => SubspaceKind::F,
            "F_hat" => SubspaceKind::FHat,
            "F_tilde" => SubspaceKind::FTilde,
            "F_tensor" => SubspaceKind::FTensor,
            "I" => SubspaceKind::I,
            "I_tilde" => SubspaceKind::ITilde,
            "I_tensor" => SubspaceKind::ITensor,
            _ => return None,
        })
    }

    /// Dimension of the faces this subspace's elements are associated to.
    pub fn expected_m(&self) -> usize {
        match self {
            SubspaceKind::V => 0,
            SubspaceKind::E | SubspaceKind::ETilde => 1,
            SubspaceKind::F | SubspaceKind::FHat | SubspaceKind::FTilde | SubspaceKind::FTensor => {
                2
            }
            SubspaceKind::I | SubspaceKind::ITilde | SubspaceKind::ITensor => 3,
        }
    }
}

impl fmt::Display for SubspaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

/// A graded subspace instance.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SubspaceId {
    pub kind: SubspaceKind,
    pub grade: i64,
    pub k: usize,
    pub n: usize,
}

impl fmt::Display for SubspaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}_{} Lambda^{}(n={})",
            self.kind, self.grade, self.k, self.n
        )
    }
}

/// One basis element together with its associated face and provenance.
#[derive(Clone, Debug)]
pub struct BasisElement {
    pub form: DifferentialForm,
    pub face: Face,
    pub subspace: SubspaceId,
}

/// An assembled computational basis.
#[derive(Clone, Debug)]
pub struct AssociatedBasis {
    pub family: FamilyId,
    pub elements: Vec<BasisElement>,
}

impl AssociatedBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn forms(&self) -> Vec<DifferentialForm> {
        self.elements.iter().map(|e| e.form.clone()).collect()
    }
}

// ---------------------------------------------------------------------------
// polynomial factor helper
// ---------------------------------------------------------------------------

/// A factor of a listed function. `Pow(axis, e)` with negative `e` makes the
/// whole product vanish (the "interpret x^{-1} as 0" convention).
#[derive(Clone, Copy)]
enum Factor {
    /// integer constant
    C(i64),
    /// `x_axis ^ e`
    Pow(usize, i64),
    /// `x_axis + sign`
    Pm(usize, i8),
    /// `x_axis^2 - 1`
    Sq(usize),
}

use Factor::{Pm, Pow, Sq, C};

fn product(n: usize, factors: &[Factor]) -> Option<Polynomial> {
    let mut out = Polynomial::one(n);
    for f in factors {
        let p = match *f {
            C(v) => Polynomial::int(n, v),
            Pow(axis, e) => {
                if e < 0 {
                    return None;
                }
                Polynomial::variable(n, axis).pow(e as u32)
            }
            Pm(axis, s) => &Polynomial::variable(n, axis) + &Polynomial::int(n, i64::from(s)),
            Sq(axis) => {
                let v = Polynomial::variable(n, axis);
                &(&v * &v) - &Polynomial::one(n)
            }
        };
        out = &out * &p;
    }
    Some(out)
}

/// Component entries of one listed row: (alternator axes, coefficient).
type RowEntries = Vec<(Vec<usize>, Option<Polynomial>)>;

/// Un-sorted element of a subspace: the form, the face it is built to sit
/// on, and its position (row of the definition, index tuple) for ordering.
struct RawElement {
    form: DifferentialForm,
    hint: Face,
    row: usize,
    jkl: [i64; 3],
}

/// Sums `coeff dx_axes` entries into a single form; `None` if every entry
/// vanished.
fn combine(n: usize, k: usize, entries: RowEntries) -> Option<DifferentialForm> {
    let mut out = DifferentialForm::zero(n, k);
    for (axes, poly) in entries {
        if let Some(p) = poly {
            if p.is_zero() {
                continue;
            }
            out = out
                .try_add(&DifferentialForm::from_component(
                    n,
                    Alternator::new(axes),
                    p,
                ))
                .expect("components share dimension and order");
        }
    }
    if out.is_zero() {
        None
    } else {
        Some(out)
    }
}

fn face1(n: usize, axis: usize, sign: i8) -> Face {
    Face::new(n, vec![(axis, sign)]).expect("valid face")
}

fn face2(n: usize, a: (usize, i8), b: (usize, i8)) -> Face {
    Face::new(n, vec![a, b]).expect("valid face")
}

// index tuple enumerations --------------------------------------------------

/// `(j, k)` with `j + k = c`, `j` ascending; empty if `c < 0`.
fn pairs_sum(c: i64) -> Vec<(i64, i64)> {
    if c < 0 {
        return Vec::new();
    }
    (0..=c).map(|j| (j, c - j)).collect()
}

/// `(j, k)` with `max(j - dj, k - dk) = level`, lexicographic; empty if
/// the level is unreachable.
fn pairs_max(level: i64, dj: i64, dk: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    if level < 0 {
        return out;
    }
    for j in 0..=(level + dj) {
        for k in 0..=(level + dk) {
            if (j - dj).max(k - dk) == level {
                out.push((j, k));
            }
        }
    }
    out
}

/// `(j, k, l)` with `j + k + l = c`, lexicographic; empty if `c < 0`.
fn triples_sum(c: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    if c < 0 {
        return out;
    }
    for j in 0..=c {
        for k in 0..=(c - j) {
            out.push((j, k, c - j - k));
        }
    }
    out
}

/// `(j, k, l)` with `max(j - dj, k - dk, l - dl) = level`, lexicographic.
fn triples_max(level: i64, dj: i64, dk: i64, dl: i64) -> Vec<(i64, i64, i64)> {
    let mut out = Vec::new();
    if level < 0 {
        return out;
    }
    for j in 0..=(level + dj) {
        for k in 0..=(level + dk) {
            for l in 0..=(level + dl) {
                if (j - dj).max(k - dk).max(l - dl) == level {
                    out.push((j, k, l));
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// subspace builders, two dimensions
// ---------------------------------------------------------------------------

fn v_0forms_2d() -> Vec<RawElement> {
    let n = 2;
    let mut out = Vec::new();
    for sx in SIGNS {
        for sy in SIGNS {
            let p = product(n, &[Pm(X, sx), Pm(Y, sy)]).unwrap();
            out.push(RawElement {
                form: DifferentialForm::from_component(n, Alternator::empty(), p),
                hint: face2(n, (X, sx), (Y, sy)),
                row: 0,
                jkl: [0, 0, 0],
            });
        }
    }
    out
}

fn e_0forms_2d(i: i64) -> Vec<RawElement> {
    let n = 2;
    let mut out = Vec::new();
    // y^i (x±1)(y²−1)
    for s in SIGNS {
        let p = product(n, &[Pow(Y, i), Pm(X, s), Sq(Y)]).unwrap();
        out.push(RawElement {
            form: DifferentialForm::from_component(n, Alternator::empty(), p),
            hint: face1(n, X, s),
            row: 0,
            jkl: [0, 0, 0],
        });
    }
    // x^i (y±1)(x²−1)
    for s in SIGNS {
        let p = product(n, &[Pow(X, i), Pm(Y, s), Sq(X)]).unwrap();
        out.push(RawElement {
            form: DifferentialForm::from_component(n, Alternator::empty(), p),
            hint: face1(n, Y, s),
            row: 1,
            jkl: [0, 0, 0],
        });
    }
    out
}

fn f_0forms_2d(pairs: &[(i64, i64)]) -> Vec<RawElement> {
    let n = 2;
    let mut out = Vec::new();
    for &(j, k) in pairs {
        if let Some(p) = product(n, &[Pow(X, j), Pow(Y, k), Sq(X), Sq(Y)]) {
            out.push(RawElement {
                form: DifferentialForm::from_component(n, Alternator::empty(), p),
                hint: Face::interior(n),
                row: 0,
                jkl: [j, k, 0],
            });
        }
    }
    out
}

fn e_1forms_2d(i: i64) -> Vec<RawElement> {
    let n = 2;
    let mut out = Vec::new();
    for s in SIGNS {
        let p = product(n, &[Pow(X, i), Pm(Y, s)]);
        out.push(RawElement {
            form: combine(n, 1, vec![(vec![X], p)]).unwrap(),
            hint: face1(n, Y, s),
            row: 0,
            jkl: [0, 0, 0],
        });
    }
    for s in SIGNS {
        let p = product(n, &[Pow(Y, i), Pm(X, s)]);
        out.push(RawElement {
            form: combine(n, 1, vec![(vec![Y], p)]).unwrap(),
            hint: face1(n, X, s),
            row: 1,
            jkl: [0, 0, 0],
        });
    }
    out
}

fn e_tilde_1forms_2d(i: i64) -> Vec<RawElement> {
    let n = 2;
    let mut out = Vec::new();
    for s in SIGNS {
        let dx = product(n, &[C(i + 1), Pow(X, i), Pm(Y, s)]);
        let dy = product(n, &[Pow(X, i - 1), Sq(X)]);
        out.push(RawElement {
            form: combine(n, 1, vec![(vec![X], dx), (vec![Y], dy)]).unwrap(),
            hint: face1(n, Y, s),
            row: 0,
            jkl: [0, 0, 0],
        });
    }
    for s in SIGNS {
        let dx = product(n, &[Pow(Y, i - 1), Sq(Y)]);
        let dy = product(n, &[C(i + 1), Pow(Y, i), Pm(X, s)]);
        out.push(RawElement {
            form: combine(n, 1, vec![(vec![X], dx), (vec![Y], dy)]).unwrap(),
            hint: face1(n, X, s),
            row: 1,
            jkl: [0, 0, 0],
        });
    }
    out
}

/// Shared row shapes of `F_i Λ^1` and `F^⊗_i Λ^1` on the square; the two
/// differ only in the admissible `(j, k)` sets (per row for the tensor
/// variant, since the alternator variable's exponent is the decremented one).
fn f_1forms_2d(dx_pairs: &[(i64, i64)], dy_pairs: &[(i64, i64)]) -> Vec<RawElement> {
    let n = 2;
    let mut out = Vec::new();
    for &(j, k) in dx_pairs {
        if let Some(form) = combine(
            n,
            1,
            vec![(vec![X], product(n, &[Pow(X, j), Pow(Y, k), Sq(Y)]))],
        ) {
            out.push(RawElement {
                form,
                hint: Face::interior(n),
                row: 0,
                jkl: [j, k, 0],
            });
        }
    }
    for &(j, k) in dy_pairs {
        if let Some(form) = combine(
            n,
            1,
            vec![(vec![Y], product(n, &[Pow(X, j), Pow(Y, k), Sq(X)]))],
        ) {
            out.push(RawElement {
                form,
                hint: Face::interior(n),
                row: 1,
                jkl: [j, k, 0],
            });
        }
    }
    out
}

fn f_tilde_1forms_2d(i: i64) -> Vec<RawElement> {
    let n = 2;
    let mut out = Vec::new();
    if let Some(form) = combine(n, 1, vec![(vec![X], product(n, &[Pow(Y, i - 2), Sq(Y)]))]) {
        out.push(RawElement {
            form,
            hint: Face::interior(n),
            row: 0,
            jkl: [0, 0, 0],
        });
    }
    if let Some(form) = combine(n, 1, vec![(vec![Y], product(n, &[Pow(X, i - 2), Sq(X)]))]) {
        out.push(RawElement {
            form,
            hint: Face::interior(n),
            row: 1,
            jkl: [0, 0, 0],
        });
    }
    for j in 1..=(i - 2) {
        let dx = product(n, &[Pow(X, j), Pow(Y, i - j - 2), Sq(Y)]);
        let dy = product(n, &[C(-1), Pow(X, j - 1), Pow(Y, i - j - 1), Sq(X)]);
        if let Some(form) = combine(n, 1, vec![(vec![X], dx), (vec![Y], dy)]) {
            out.push(RawElement {
                form,
                hint: Face::interior(n),
                row: 2,
                jkl: [j, 0, 0],
            });
        }
    }
    out
}

fn f_2forms_2d(pairs: &[(i64, i64)]) -> Vec<RawElement> {
    let n = 2;
    let mut out = Vec::new();
    for &(j, k) in pairs {
        if let Some(form) = combine(
            n,
            2,
            vec![(vec![X, Y], product(n, &[Pow(X, j), Pow(Y, k)]))],
        ) {
            out.push(RawElement {
                form,
                hint: Face::interior(n),
                row: 0,
                jkl: [j, k, 0],
            });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// subspace builders, three dimensions
// ---------------------------------------------------------------------------

fn v_0forms_3d() -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    for sx in SIGNS {
        for sy in SIGNS {
            for sz in SIGNS {
                let p = product(n, &[Pm(X, sx), Pm(Y, sy), Pm(Z, sz)]).unwrap();
                out.push(RawElement {
                    form: DifferentialForm::from_component(n, Alternator::empty(), p),
                    hint: Face::new(n, vec![(X, sx), (Y, sy), (Z, sz)]).unwrap(),
                    row: 0,
                    jkl: [0, 0, 0],
                });
            }
        }
    }
    out
}

fn e_0forms_3d(i: i64) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    // rows: z^i(x±)(y±)(z²−1), y^i(x±)(z±)(y²−1), x^i(y±)(z±)(x²−1)
    let rows = [(Z, X, Y), (Y, X, Z), (X, Y, Z)];
    for (row, &(a, b, c)) in rows.iter().enumerate() {
        for sb in SIGNS {
            for sc in SIGNS {
                let p = product(n, &[Pow(a, i), Pm(b, sb), Pm(c, sc), Sq(a)]).unwrap();
                out.push(RawElement {
                    form: DifferentialForm::from_component(n, Alternator::empty(), p),
                    hint: face2(n, (b, sb), (c, sc)),
                    row,
                    jkl: [0, 0, 0],
                });
            }
        }
    }
    out
}

fn f_0forms_3d(pairs: &[(i64, i64)]) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    // rows: x^j y^k(z±1)(x²−1)(y²−1), x^j z^k(y±1)(x²−1)(z²−1), y^j z^k(x±1)(y²−1)(z²−1)
    let rows = [(X, Y, Z), (X, Z, Y), (Y, Z, X)];
    for (row, &(a, b, pinned)) in rows.iter().enumerate() {
        for &(j, k) in pairs {
            for s in SIGNS {
                if let Some(p) = product(n, &[Pow(a, j), Pow(b, k), Pm(pinned, s), Sq(a), Sq(b)]) {
                    out.push(RawElement {
                        form: DifferentialForm::from_component(n, Alternator::empty(), p),
                        hint: face1(n, pinned, s),
                        row,
                        jkl: [j, k, 0],
                    });
                }
            }
        }
    }
    out
}

fn i_0forms_3d(triples: &[(i64, i64, i64)]) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    for &(j, k, l) in triples {
        if let Some(p) = product(n, &[Pow(X, j), Pow(Y, k), Pow(Z, l), Sq(X), Sq(Y), Sq(Z)]) {
            out.push(RawElement {
                form: DifferentialForm::from_component(n, Alternator::empty(), p),
                hint: Face::interior(n),
                row: 0,
                jkl: [j, k, l],
            });
        }
    }
    out
}

fn e_1forms_3d(i: i64) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    let rows = [(X, Y, Z), (Y, X, Z), (Z, X, Y)];
    for (row, &(a, b, c)) in rows.iter().enumerate() {
        for sb in SIGNS {
            for sc in SIGNS {
                let p = product(n, &[Pow(a, i), Pm(b, sb), Pm(c, sc)]);
                out.push(RawElement {
                    form: combine(n, 1, vec![(vec![a], p)]).unwrap(),
                    hint: face2(n, (b, sb), (c, sc)),
                    row,
                    jkl: [0, 0, 0],
                });
            }
        }
    }
    out
}

fn e_tilde_1forms_3d(i: i64) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    // Row with main axis a and the other two axes (b, c) in ascending order.
    // Exactly two independent sign slots per row: the (b±1) and (c±1)
    // factors are shared between the entries they appear in.
    let rows = [(X, Y, Z), (Y, X, Z), (Z, X, Y)];
    for (row, &(a, b, c)) in rows.iter().enumerate() {
        for sb in SIGNS {
            for sc in SIGNS {
                let main = product(n, &[C(i + 1), Pow(a, i), Pm(b, sb), Pm(c, sc)]);
                let comp_b = product(n, &[Pow(a, i - 1), Pm(c, sc), Sq(a)]);
                let comp_c = product(n, &[Pow(a, i - 1), Pm(b, sb), Sq(a)]);
                let form = combine(
                    n,
                    1,
                    vec![(vec![a], main), (vec![b], comp_b), (vec![c], comp_c)],
                )
                .unwrap();
                out.push(RawElement {
                    form,
                    hint: face2(n, (b, sb), (c, sc)),
                    row,
                    jkl: [0, 0, 0],
                });
            }
        }
    }
    out
}

/// Shared row shapes of `F_i Λ^1` and `F^⊗_i Λ^1` on the cube. In every row
/// `j` is the exponent of the alternator variable.
fn f_1forms_3d(pairs: &[(i64, i64)]) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    // (alternator axis a, second exponent axis b, pinned axis, bubble axis)
    // rows: x^j y^k(z±1)(y²−1) dx, x^j z^k(y±1)(z²−1) dx,
    //       y^j x^k(z±1)(x²−1) dy, y^j z^k(x±1)(z²−1) dy,
    //       z^j y^k(x±1)(y²−1) dz, z^j x^k(y±1)(x²−1) dz
    // In every row the second exponent sits on the bubble variable and the
    // remaining variable is pinned; all readings coincide at grade 2, and
    // the rank checks pin down this one at higher grades.
    let rows = [
        (X, Y, Z, Y),
        (X, Z, Y, Z),
        (Y, X, Z, X),
        (Y, Z, X, Z),
        (Z, Y, X, Y),
        (Z, X, Y, X),
    ];
    for (row, &(a, b, pinned, bubble)) in rows.iter().enumerate() {
        for &(j, k) in pairs {
            for s in SIGNS {
                let p = product(n, &[Pow(a, j), Pow(b, k), Pm(pinned, s), Sq(bubble)]);
                if let Some(form) = combine(n, 1, vec![(vec![a], p)]) {
                    out.push(RawElement {
                        form,
                        hint: face1(n, pinned, s),
                        row,
                        jkl: [j, k, 0],
                    });
                }
            }
        }
    }
    out
}

fn f_hat_1forms_3d(i: i64) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    // rows 0-5: pure face rows shared with the tilde variant
    out.extend(f_hat_tilde_shared_rows_3d(i));
    // rows 6-11, 1 <= j <= i-2
    for j in 1..=(i - 2) {
        for s in SIGNS {
            let rows: Vec<(usize, RowEntries, Face)> = vec![
                (
                    6,
                    vec![
                        (
                            vec![X],
                            product(
                                n,
                                &[C(i + 1), Pow(X, j), Pow(Y, i - j - 2), Pm(Z, s), Sq(Y)],
                            ),
                        ),
                        (
                            vec![Z],
                            product(n, &[Pow(X, j - 1), Pow(Y, i - j - 2), Sq(X), Sq(Y)]),
                        ),
                    ],
                    face1(n, Z, s),
                ),
                (
                    7,
                    vec![
                        (
                            vec![X],
                            product(
                                n,
                                &[C(i + 1), Pow(X, j), Pow(Z, i - j - 2), Pm(Y, s), Sq(Z)],
                            ),
                        ),
                        (
                            vec![Y],
                            product(n, &[Pow(X, j - 1), Pow(Z, i - j - 2), Sq(X), Sq(Z)]),
                        ),
                    ],
                    face1(n, Y, s),
                ),
                (
                    8,
                    vec![
                        (
                            vec![X],
                            product(n, &[Pow(Y, j - 1), Pow(Z, i - j - 2), Sq(Y), Sq(Z)]),
                        ),
                        (
                            vec![Y],
                            product(
                                n,
                                &[C(i + 1), Pow(Y, j), Pow(Z, i - j - 2), Pm(X, s), Sq(Z)],
                            ),
                        ),
                    ],
                    face1(n, X, s),
                ),
                (
                    9,
                    vec![
                        (
                            vec![Y],
                            product(
                                n,
                                &[C(i + 1), Pow(Y, j), Pow(X, i - j - 2), Pm(Z, s), Sq(X)],
                            ),
                        ),
                        (
                            vec![Z],
                            product(n, &[Pow(Y, j - 1), Pow(X, i - j - 2), Sq(X), Sq(Y)]),
                        ),
                    ],
                    face1(n, Z, s),
                ),
                (
                    10,
                    vec![
                        (
                            vec![Y],
                            product(n, &[Pow(Z, j - 1), Pow(X, i - j - 2), Sq(X), Sq(Z)]),
                        ),
                        (
                            vec![Z],
                            product(
                                n,
                                &[C(i + 1), Pow(Z, j), Pow(X, i - j - 2), Pm(Y, s), Sq(X)],
                            ),
                        ),
                    ],
                    face1(n, Y, s),
                ),
                (
                    11,
                    vec![
                        (
                            vec![X],
                            product(n, &[Pow(Z, j - 1), Pow(Y, i - j - 2), Sq(Y), Sq(Z)]),
                        ),
                        (
                            vec![Z],
                            product(
                                n,
                                &[C(i + 1), Pow(Z, j), Pow(Y, i - j - 2), Pm(X, s), Sq(Y)],
                            ),
                        ),
                    ],
                    face1(n, X, s),
                ),
            ];
            for (row, entries, hint) in rows {
                if let Some(form) = combine(n, 1, entries) {
                    out.push(RawElement {
                        form,
                        hint,
                        row,
                        jkl: [j, 0, 0],
                    });
                }
            }
        }
    }
    out
}

/// Rows 0-5 shared by `F̂_i Λ^1` and `F̃_i Λ^1`: one pure face function per
/// face of the cube.
fn f_hat_tilde_shared_rows_3d(i: i64) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    // (component axis, exponent axis = bubble axis, pinned axis)
    let rows = [
        (X, Y, Z),
        (X, Z, Y),
        (Y, X, Z),
        (Y, Z, X),
        (Z, X, Y),
        (Z, Y, X),
    ];
    for (row, &(comp, a, pinned)) in rows.iter().enumerate() {
        for s in SIGNS {
            let p = product(n, &[Pow(a, i - 2), Pm(pinned, s), Sq(a)]);
            if let Some(form) = combine(n, 1, vec![(vec![comp], p)]) {
                out.push(RawElement {
                    form,
                    hint: face1(n, pinned, s),
                    row,
                    jkl: [0, 0, 0],
                });
            }
        }
    }
    out
}

fn f_tilde_1forms_3d(i: i64) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    out.extend(f_hat_tilde_shared_rows_3d(i));
    // rows 6-8, 1 <= j <= i-2; the (pinned ± 1) factor is one shared sign slot
    for j in 1..=(i - 2) {
        for s in SIGNS {
            let rows: Vec<(usize, RowEntries, Face)> = vec![
                (
                    6,
                    vec![
                        (
                            vec![X],
                            product(n, &[Pow(X, j), Pow(Y, i - j - 2), Pm(Z, s), Sq(Y)]),
                        ),
                        (
                            vec![Y],
                            product(
                                n,
                                &[C(-1), Pow(X, j - 1), Pow(Y, i - j - 1), Pm(Z, s), Sq(X)],
                            ),
                        ),
                    ],
                    face1(n, Z, s),
                ),
                (
                    7,
                    vec![
                        (
                            vec![X],
                            product(n, &[Pow(X, j), Pow(Z, i - j - 2), Pm(Y, s), Sq(Z)]),
                        ),
                        (
                            vec![Z],
                            product(
                                n,
                                &[C(-1), Pow(X, j - 1), Pow(Z, i - j - 1), Pm(Y, s), Sq(X)],
                            ),
                        ),
                    ],
                    face1(n, Y, s),
                ),
                (
                    8,
                    vec![
                        (
                            vec![Y],
                            product(n, &[Pow(Y, j), Pow(Z, i - j - 2), Pm(X, s), Sq(Z)]),
                        ),
                        (
                            vec![Z],
                            product(
                                n,
                                &[C(-1), Pow(Y, j - 1), Pow(Z, i - j - 1), Pm(X, s), Sq(Y)],
                            ),
                        ),
                    ],
                    face1(n, X, s),
                ),
            ];
            for (row, entries, hint) in rows {
                if let Some(form) = combine(n, 1, entries) {
                    out.push(RawElement {
                        form,
                        hint,
                        row,
                        jkl: [j, 0, 0],
                    });
                }
            }
        }
    }
    out
}

/// Shared row shapes of `I_i Λ^1` and `I^⊗_i Λ^1` (interior 1-form bubbles).
fn i_1forms_3d(
    dx: &[(i64, i64, i64)],
    dy: &[(i64, i64, i64)],
    dz: &[(i64, i64, i64)],
) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    let rows = [(X, Y, Z, dx), (Y, X, Z, dy), (Z, X, Y, dz)];
    for (row, &(comp, b1, b2, triples)) in rows.iter().enumerate() {
        for &(j, k, l) in triples {
            let p = product(n, &[Pow(X, j), Pow(Y, k), Pow(Z, l), Sq(b1), Sq(b2)]);
            if let Some(form) = combine(n, 1, vec![(vec![comp], p)]) {
                out.push(RawElement {
                    form,
                    hint: Face::interior(n),
                    row,
                    jkl: [j, k, l],
                });
            }
        }
    }
    out
}

fn i_tilde_1forms_3d(i: i64) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    // rows 0-5
    let pure = [
        (X, Y, (Y, Z)),
        (X, Z, (Y, Z)),
        (Y, X, (X, Z)),
        (Y, Z, (X, Z)),
        (Z, X, (X, Y)),
        (Z, Y, (X, Y)),
    ];
    for (row, &(comp, a, (b1, b2))) in pure.iter().enumerate() {
        let p = product(n, &[Pow(a, i - 4), Sq(b1), Sq(b2)]);
        if let Some(form) = combine(n, 1, vec![(vec![comp], p)]) {
            out.push(RawElement {
                form,
                hint: Face::interior(n),
                row,
                jkl: [0, 0, 0],
            });
        }
    }
    // rows 6-8, 1 <= j <= i-4; the last row is omitted when i = 5, where it
    // would duplicate the span of the previous two.
    for j in 1..=(i - 4) {
        let mut rows: Vec<(usize, RowEntries)> = vec![
            (
                6,
                vec![
                    (
                        vec![X],
                        product(n, &[Pow(X, j), Pow(Y, i - j - 4), Sq(Y), Sq(Z)]),
                    ),
                    (
                        vec![Y],
                        product(n, &[C(-1), Pow(X, j - 1), Pow(Y, i - j - 3), Sq(X), Sq(Z)]),
                    ),
                ],
            ),
            (
                7,
                vec![
                    (
                        vec![X],
                        product(n, &[Pow(X, j), Pow(Z, i - j - 4), Sq(Y), Sq(Z)]),
                    ),
                    (
                        vec![Z],
                        product(n, &[C(-1), Pow(X, j - 1), Pow(Z, i - j - 3), Sq(X), Sq(Y)]),
                    ),
                ],
            ),
        ];
        if i != 5 {
            rows.push((
                8,
                vec![
                    (
                        vec![Y],
                        product(n, &[Pow(Y, j), Pow(Z, i - j - 4), Sq(X), Sq(Z)]),
                    ),
                    (
                        vec![Z],
                        product(n, &[C(-1), Pow(Y, j - 1), Pow(Z, i - j - 3), Sq(X), Sq(Y)]),
                    ),
                ],
            ));
        }
        for (row, entries) in rows {
            if let Some(form) = combine(n, 1, entries) {
                out.push(RawElement {
                    form,
                    hint: Face::interior(n),
                    row,
                    jkl: [j, 0, 0],
                });
            }
        }
    }
    out
}

const DYDZ: [usize; 2] = [Y, Z];
const DXDZ: [usize; 2] = [X, Z];
const DXDY: [usize; 2] = [X, Y];

/// Shared row shapes of `F_i Λ^2` and `F^⊗_i Λ^2` on the cube: pure face
/// functions, one per (face, tangential monomial).
fn f_2forms_3d(pairs: &[(i64, i64)]) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    let rows = [(DYDZ, Y, Z, X), (DXDZ, X, Z, Y), (DXDY, X, Y, Z)];
    for (row, &(alt, a, b, pinned)) in rows.iter().enumerate() {
        for &(j, k) in pairs {
            for s in SIGNS {
                let p = product(n, &[Pow(a, j), Pow(b, k), Pm(pinned, s)]);
                if let Some(form) = combine(n, 2, vec![(alt.to_vec(), p)]) {
                    out.push(RawElement {
                        form,
                        hint: face1(n, pinned, s),
                        row,
                        jkl: [j, k, 0],
                    });
                }
            }
        }
    }
    out
}

fn f_tilde_2forms_3d(i: i64) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    // rows 0-5
    for s in SIGNS {
        let rows: Vec<(usize, RowEntries, Face)> = vec![
            (
                0,
                vec![
                    (DYDZ.to_vec(), product(n, &[C(i + 1), Pow(Y, i), Pm(X, s)])),
                    (DXDZ.to_vec(), product(n, &[Pow(Y, i - 1), Sq(Y)])),
                ],
                face1(n, X, s),
            ),
            (
                1,
                vec![
                    (DYDZ.to_vec(), product(n, &[C(i + 1), Pow(Z, i), Pm(X, s)])),
                    (DXDY.to_vec(), product(n, &[C(-1), Pow(Z, i - 1), Sq(Z)])),
                ],
                face1(n, X, s),
            ),
            (
                2,
                vec![
                    (DYDZ.to_vec(), product(n, &[Pow(X, i - 1), Sq(X)])),
                    (DXDZ.to_vec(), product(n, &[C(i + 1), Pow(X, i), Pm(Y, s)])),
                ],
                face1(n, Y, s),
            ),
            (
                3,
                vec![
                    (DXDZ.to_vec(), product(n, &[C(i + 1), Pow(Z, i), Pm(Y, s)])),
                    (DXDY.to_vec(), product(n, &[Pow(Z, i - 1), Sq(Z)])),
                ],
                face1(n, Y, s),
            ),
            (
                4,
                vec![
                    (DYDZ.to_vec(), product(n, &[C(-1), Pow(X, i - 1), Sq(X)])),
                    (DXDY.to_vec(), product(n, &[C(i + 1), Pow(X, i), Pm(Z, s)])),
                ],
                face1(n, Z, s),
            ),
            (
                5,
                vec![
                    (DXDZ.to_vec(), product(n, &[Pow(Y, i - 1), Sq(Y)])),
                    (DXDY.to_vec(), product(n, &[C(i + 1), Pow(Y, i), Pm(Z, s)])),
                ],
                face1(n, Z, s),
            ),
        ];
        for (row, entries, hint) in rows {
            if let Some(form) = combine(n, 2, entries) {
                out.push(RawElement {
                    form,
                    hint,
                    row,
                    jkl: [0, 0, 0],
                });
            }
        }
    }
    // rows 6-8, 1 <= j <= i-1
    for j in 1..=(i - 1) {
        for s in SIGNS {
            let rows: Vec<(usize, RowEntries, Face)> = vec![
                (
                    6,
                    vec![
                        (
                            DYDZ.to_vec(),
                            product(n, &[C(i + 2), Pow(Y, j), Pow(Z, i - j), Pm(X, s)]),
                        ),
                        (
                            DXDZ.to_vec(),
                            product(n, &[Pow(Y, j - 1), Pow(Z, i - j), Sq(Y)]),
                        ),
                        (
                            DXDY.to_vec(),
                            product(n, &[C(-1), Pow(Y, j), Pow(Z, i - j - 1), Sq(Z)]),
                        ),
                    ],
                    face1(n, X, s),
                ),
                (
                    7,
                    vec![
                        (
                            DYDZ.to_vec(),
                            product(n, &[Pow(X, j - 1), Pow(Z, i - j), Sq(X)]),
                        ),
                        (
                            DXDZ.to_vec(),
                            product(n, &[C(i + 2), Pow(X, j), Pow(Z, i - j), Pm(Y, s)]),
                        ),
                        (
                            DXDY.to_vec(),
                            product(n, &[Pow(X, j), Pow(Z, i - j - 1), Sq(Z)]),
                        ),
                    ],
                    face1(n, Y, s),
                ),
                (
                    8,
                    vec![
                        (
                            DYDZ.to_vec(),
                            product(n, &[C(-1), Pow(X, j - 1), Pow(Y, i - j), Sq(X)]),
                        ),
                        (
                            DXDZ.to_vec(),
                            product(n, &[Pow(X, j), Pow(Y, i - j - 1), Sq(Y)]),
                        ),
                        (
                            DXDY.to_vec(),
                            product(n, &[C(i + 2), Pow(X, j), Pow(Y, i - j), Pm(Z, s)]),
                        ),
                    ],
                    face1(n, Z, s),
                ),
            ];
            for (row, entries, hint) in rows {
                if let Some(form) = combine(n, 2, entries) {
                    out.push(RawElement {
                        form,
                        hint,
                        row,
                        jkl: [j, 0, 0],
                    });
                }
            }
        }
    }
    out
}

/// Shared row shapes of `I_i Λ^2` and `I^⊗_i Λ^2` (interior 2-form bubbles).
fn i_2forms_3d(
    dydz: &[(i64, i64, i64)],
    dxdz: &[(i64, i64, i64)],
    dxdy: &[(i64, i64, i64)],
) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    let rows = [(DYDZ, X, dydz), (DXDZ, Y, dxdz), (DXDY, Z, dxdy)];
    for (row, &(alt, bubble, triples)) in rows.iter().enumerate() {
        for &(j, k, l) in triples {
            let p = product(n, &[Pow(X, j), Pow(Y, k), Pow(Z, l), Sq(bubble)]);
            if let Some(form) = combine(n, 2, vec![(alt.to_vec(), p)]) {
                out.push(RawElement {
                    form,
                    hint: Face::interior(n),
                    row,
                    jkl: [j, k, l],
                });
            }
        }
    }
    out
}

fn i_tilde_2forms_3d(i: i64) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    // rows 0-2
    let pure = [(DYDZ, X), (DXDZ, Y), (DXDY, Z)];
    for (row, &(alt, a)) in pure.iter().enumerate() {
        let p = product(n, &[Pow(a, i - 2), Sq(a)]);
        if let Some(form) = combine(n, 2, vec![(alt.to_vec(), p)]) {
            out.push(RawElement {
                form,
                hint: Face::interior(n),
                row,
                jkl: [0, 0, 0],
            });
        }
    }
    // rows 3-5, 1 <= j <= i-2
    for j in 1..=(i - 2) {
        let rows: Vec<(usize, RowEntries)> = vec![
            (
                3,
                vec![
                    (
                        DYDZ.to_vec(),
                        product(n, &[Pow(X, i - j - 2), Pow(Y, j), Sq(X)]),
                    ),
                    (
                        DXDZ.to_vec(),
                        product(n, &[C(-1), Pow(X, i - j - 1), Pow(Y, j - 1), Sq(Y)]),
                    ),
                ],
            ),
            (
                4,
                vec![
                    (
                        DYDZ.to_vec(),
                        product(n, &[Pow(X, i - j - 2), Pow(Z, j), Sq(X)]),
                    ),
                    (
                        DXDY.to_vec(),
                        product(n, &[Pow(X, i - j - 1), Pow(Z, j - 1), Sq(Z)]),
                    ),
                ],
            ),
            (
                5,
                vec![
                    (
                        DXDZ.to_vec(),
                        product(n, &[Pow(Y, i - j - 2), Pow(Z, j), Sq(Y)]),
                    ),
                    (
                        DXDY.to_vec(),
                        product(n, &[C(-1), Pow(Y, i - j - 1), Pow(Z, j - 1), Sq(Z)]),
                    ),
                ],
            ),
        ];
        for (row, entries) in rows {
            if let Some(form) = combine(n, 2, entries) {
                out.push(RawElement {
                    form,
                    hint: Face::interior(n),
                    row,
                    jkl: [j, 0, 0],
                });
            }
        }
    }
    // row 6: j >= 0, k >= 1, l >= 1, j + k + l = i - 2
    for (j, k, l) in triples_sum(i - 2) {
        if k < 1 || l < 1 {
            continue;
        }
        let entries = vec![
            (
                DYDZ.to_vec(),
                product(n, &[Pow(X, j), Pow(Y, k), Pow(Z, l), Sq(X)]),
            ),
            (
                DXDZ.to_vec(),
                product(n, &[C(-1), Pow(X, j + 1), Pow(Y, k - 1), Pow(Z, l), Sq(Y)]),
            ),
            (
                DXDY.to_vec(),
                product(n, &[Pow(X, j + 1), Pow(Y, k), Pow(Z, l - 1), Sq(Z)]),
            ),
        ];
        if let Some(form) = combine(n, 2, entries) {
            out.push(RawElement {
                form,
                hint: Face::interior(n),
                row: 6,
                jkl: [j, k, l],
            });
        }
    }
    out
}

fn i_3forms_3d(triples: &[(i64, i64, i64)]) -> Vec<RawElement> {
    let n = 3;
    let mut out = Vec::new();
    for &(j, k, l) in triples {
        let p = product(n, &[Pow(X, j), Pow(Y, k), Pow(Z, l)]);
        if let Some(form) = combine(n, 3, vec![(vec![X, Y, Z], p)]) {
            out.push(RawElement {
                form,
                hint: Face::interior(n),
                row: 0,
                jkl: [j, k, l],
            });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// dispatch, validation, assembly
// ---------------------------------------------------------------------------

/// Lowest admissible grade for a subspace kind at the given `(k, n)`;
/// `None` when the kind does not exist there.
fn min_grade(kind: SubspaceKind, k: usize, n: usize) -> Option<i64> {
    use SubspaceKind::*;
    match (n, k, kind) {
        (2, 0, V) => Some(0),
        (2, 0, E) => Some(0),
        (2, 0, F) => Some(4),
        (2, 0, FTensor) => Some(1),
        (2, 1, E) | (2, 1, ETilde) => Some(0),
        (2, 1, F) | (2, 1, FTilde) => Some(2),
        (2, 1, FTensor) => Some(1),
        (2, 2, F) => Some(0),
        (2, 2, FTensor) => Some(1),
        (3, 0, V) => Some(0),
        (3, 0, E) => Some(0),
        (3, 0, F) => Some(4),
        (3, 0, FTensor) => Some(1),
        (3, 0, I) => Some(6),
        (3, 0, ITensor) => Some(1),
        (3, 1, E) | (3, 1, ETilde) => Some(0),
        (3, 1, F) | (3, 1, FHat) | (3, 1, FTilde) => Some(2),
        (3, 1, FTensor) => Some(1),
        (3, 1, I) | (3, 1, ITilde) => Some(4),
        (3, 1, ITensor) => Some(1),
        (3, 2, F) => Some(0),
        (3, 2, FTensor) | (3, 2, FTilde) => Some(1),
        (3, 2, I) | (3, 2, ITilde) => Some(2),
        (3, 2, ITensor) => Some(1),
        (3, 3, I) => Some(0),
        (3, 3, ITensor) => Some(1),
        _ => None,
    }
}

fn subspace_raw(id: &SubspaceId) -> Vec<RawElement> {
    let mut raw = subspace_rows(id);
    // At boundary grades distinct rows can produce the same function (the
    // zero-exponent instances of paired rows); keep the first occurrence.
    let mut seen: Vec<DifferentialForm> = Vec::with_capacity(raw.len());
    raw.retain(|e| {
        if seen.contains(&e.form) {
            false
        } else {
            seen.push(e.form.clone());
            true
        }
    });
    raw
}

fn subspace_rows(id: &SubspaceId) -> Vec<RawElement> {
    use SubspaceKind::*;
    let i = id.grade;
    match (id.n, id.k, id.kind) {
        (2, 0, V) => v_0forms_2d(),
        (2, 0, E) => e_0forms_2d(i),
        (2, 0, F) => f_0forms_2d(&pairs_sum(i - 4)),
        (2, 0, FTensor) => f_0forms_2d(&pairs_max(i - 1, 0, 0)),
        (2, 1, E) => e_1forms_2d(i),
        (2, 1, ETilde) => e_tilde_1forms_2d(i),
        (2, 1, F) => f_1forms_2d(&pairs_sum(i - 2), &pairs_sum(i - 2)),
        (2, 1, FTensor) => f_1forms_2d(&pairs_max(i - 1, 1, 0), &pairs_max(i - 1, 0, 1)),
        (2, 1, FTilde) => f_tilde_1forms_2d(i),
        (2, 2, F) => f_2forms_2d(&pairs_sum(i)),
        (2, 2, FTensor) => f_2forms_2d(&pairs_max(i - 1, 0, 0)),
        (3, 0, V) => v_0forms_3d(),
        (3, 0, E) => e_0forms_3d(i),
        (3, 0, F) => f_0forms_3d(&pairs_sum(i - 4)),
        (3, 0, FTensor) => f_0forms_3d(&pairs_max(i - 1, 0, 0)),
        (3, 0, I) => i_0forms_3d(&triples_sum(i - 6)),
        (3, 0, ITensor) => i_0forms_3d(&triples_max(i - 1, 0, 0, 0)),
        (3, 1, E) => e_1forms_3d(i),
        (3, 1, ETilde) => e_tilde_1forms_3d(i),
        (3, 1, F) => f_1forms_3d(&pairs_sum(i - 2)),
        (3, 1, FTensor) => f_1forms_3d(&pairs_max(i - 1, 1, 0)),
        (3, 1, FHat) => f_hat_1forms_3d(i),
        (3, 1, FTilde) => f_tilde_1forms_3d(i),
        (3, 1, I) => {
            let t = triples_sum(i - 4);
            i_1forms_3d(&t, &t, &t)
        }
        (3, 1, ITensor) => i_1forms_3d(
            &triples_max(i - 1, 1, 0, 0),
            &triples_max(i - 1, 0, 1, 0),
            &triples_max(i - 1, 0, 0, 1),
        ),
        (3, 1, ITilde) => i_tilde_1forms_3d(i),
        (3, 2, F) => f_2forms_3d(&pairs_sum(i)),
        (3, 2, FTensor) => f_2forms_3d(&pairs_max(i - 1, 0, 0)),
        (3, 2, FTilde) => f_tilde_2forms_3d(i),
        (3, 2, I) => {
            let t = triples_sum(i - 2);
            i_2forms_3d(&t, &t, &t)
        }
        (3, 2, ITensor) => i_2forms_3d(
            &triples_max(i - 1, 0, 1, 1),
            &triples_max(i - 1, 1, 0, 1),
            &triples_max(i - 1, 1, 1, 0),
        ),
        (3, 2, ITilde) => i_tilde_2forms_3d(i),
        (3, 3, I) => i_3forms_3d(&triples_sum(i)),
        (3, 3, ITensor) => i_3forms_3d(&triples_max(i - 1, 0, 0, 0)),
        _ => unreachable!("subspace_raw called on unvalidated id"),
    }
}

/// Fully expanded function list of a graded subspace, in definition order.
pub fn subspace(id: &SubspaceId) -> Result<Vec<DifferentialForm>, BasisError> {
    let min = min_grade(id.kind, id.k, id.n).ok_or_else(|| BasisError::UnknownSubspace {
        kind: id.kind.to_string(),
        k: id.k,
        n: id.n,
    })?;
    if id.grade < min {
        return Err(BasisError::GradeTooSmall {
            kind: id.kind.to_string(),
            k: id.k,
            n: id.n,
            min,
            i: id.grade,
        });
    }
    Ok(subspace_raw(id).into_iter().map(|r| r.form).collect())
}

/// Finds the unique face of dimension `m_w` (the minimum dimension carrying
/// nonzero trace) on which `w` has nonzero trace. This is the membership
/// test of the computational basis definition; an element with zero or
/// several candidate faces is rejected.
pub fn associate_face(w: &DifferentialForm, n: usize) -> Result<Face, BasisError> {
    if w.ambient_dim() != n {
        return Err(BasisError::ConstructionMismatch(format!(
            "form lives in dimension {}, not {n}",
            w.ambient_dim()
        )));
    }
    if w.is_zero() {
        return Err(BasisError::NotComputational("the zero form".into()));
    }
    let m = min_trace_dim(w).map_err(BasisError::Form)?;
    let mut hits = Vec::new();
    for face in faces_of_cube(n, m).map_err(BasisError::Form)? {
        if !w.trace(&face).map_err(BasisError::Form)?.is_zero() {
            hits.push(face);
        }
    }
    match hits.len() {
        1 => Ok(hits.pop().expect("nonempty")),
        count => Err(BasisError::NotComputational(format!(
            "{count} faces of dimension {m} carry nonzero trace"
        ))),
    }
}

/// The table cell describing one family: summands in order of ascending
/// associated-face dimension. Empty ranges contribute nothing.
fn table(family: Family, n: usize, k: usize, r: i64) -> Vec<(SubspaceKind, i64, i64)> {
    use Family::*;
    use SubspaceKind::*;
    match (family, n, k) {
        (QMinus, 2, 0) => vec![(V, 0, 0), (E, 0, r - 2), (FTensor, 1, r - 1)],
        (QMinus, 2, 1) => vec![(E, 0, r - 1), (FTensor, 1, r - 1)],
        (QMinus, 2, 2) => vec![(FTensor, 1, r)],
        (S, 2, 0) => vec![(V, 0, 0), (E, 0, r - 2), (F, 4, r)],
        (S, 2, 1) => vec![(E, 0, r - 1), (ETilde, r, r), (F, 2, r)],
        (S, 2, 2) => vec![(F, 0, r)],
        (SMinus, 2, 0) => vec![(V, 0, 0), (E, 0, r - 2), (F, 4, r)],
        (SMinus, 2, 1) => vec![(E, 0, r - 1), (F, 2, r - 1), (FTilde, r, r)],
        (SMinus, 2, 2) => vec![(F, 0, r - 1)],
        (QMinus, 3, 0) => vec![
            (V, 0, 0),
            (E, 0, r - 2),
            (FTensor, 1, r - 1),
            (ITensor, 1, r - 1),
        ],
        (QMinus, 3, 1) => vec![(E, 0, r - 1), (FTensor, 1, r - 1), (ITensor, 1, r - 1)],
        (QMinus, 3, 2) => vec![(FTensor, 1, r), (ITensor, 1, r - 1)],
        (QMinus, 3, 3) => vec![(ITensor, 1, r)],
        (S, 3, 0) => vec![(V, 0, 0), (E, 0, r - 2), (F, 4, r), (I, 6, r)],
        (S, 3, 1) => vec![
            (E, 0, r - 1),
            (ETilde, r, r),
            (F, 2, r - 1),
            (FHat, r, r),
            (I, 4, r),
        ],
        (S, 3, 2) => vec![(F, 0, r - 1), (FTilde, r, r), (I, 2, r)],
        (S, 3, 3) => vec![(I, 0, r)],
        (SMinus, 3, 0) => vec![(V, 0, 0), (E, 0, r - 2), (F, 4, r), (I, 6, r)],
        (SMinus, 3, 1) => vec![
            (E, 0, r - 1),
            (F, 2, r - 1),
            (FTilde, r, r),
            (I, 4, r - 1),
            (ITilde, r, r),
        ],
        (SMinus, 3, 2) => vec![(F, 0, r - 1), (I, 2, r - 1), (ITilde, r, r)],
        (SMinus, 3, 3) => vec![(I, 0, r - 1)],
        _ => unreachable!("validated family"),
    }
}

/// Builds the computational basis for a family: the union of its table
/// summands, each element annotated with its associated face.
///
/// Every element's face is recomputed by trace analysis and cross-checked
/// against the construction (the sign pattern of its defining row and the
/// face dimension of its subspace kind).
pub fn assemble(family: &FamilyId) -> Result<AssociatedBasis, BasisError> {
    family.validate()?;
    let n = family.n;
    let k = family.k;
    let mut elements = Vec::new();
    for (kind, lo, hi) in table(family.family, n, k, i64::from(family.r)) {
        let min = match min_grade(kind, k, n) {
            Some(m) => m,
            None => continue,
        };
        for grade in lo..=hi {
            if grade < min {
                continue;
            }
            let id = SubspaceId { kind, grade, k, n };
            let m = kind.expected_m().min(n);
            let dim_faces = faces_of_cube(n, m).map_err(BasisError::Form)?;
            let mut batch = Vec::new();
            for raw in subspace_raw(&id) {
                let face = associate_face(&raw.form, n)?;
                if face != raw.hint {
                    return Err(BasisError::ConstructionMismatch(format!(
                        "{id}: element built for face {} is associated to {face}",
                        raw.hint
                    )));
                }
                if face.dim() != m {
                    return Err(BasisError::ConstructionMismatch(format!(
                        "{id}: element sits on a face of dimension {}, expected {m}",
                        face.dim()
                    )));
                }
                let face_index = dim_faces
                    .iter()
                    .position(|f| *f == face)
                    .expect("face enumeration is complete");
                batch.push((face_index, raw.row, raw.jkl, raw.form, face));
            }
            batch.sort_by_key(|e| (e.0, e.1, e.2));
            for (_, _, _, form, face) in batch {
                elements.push(BasisElement {
                    form,
                    face,
                    subspace: id,
                });
            }
        }
    }
    Ok(AssociatedBasis {
        family: *family,
        elements,
    })
}
