//! Named groups and parametric families, the group-spec mini-language, and
//! the builtin corpus.
//!
//! Naming convention: `Dih(m)` is the dihedral group of total order `2m`, so
//! the 2-power family usually written `D_{2^n}` is `Dih(2^{n-1})` here.
//! `Q(2^n)` is generalized quaternion, `SD(2^n)` semidihedral and `M(2^n)`
//! modular maximal-cyclic, all named by their total order.

use std::fmt;

use thiserror::Error;

use crate::grpcore::{ElementSet, Group, GroupError, Perm, DEFAULT_CAP};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A parsed constructor description for a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// `C(n)`, cyclic of order n >= 1.
    Cyclic(u64),
    /// `Dih(m)`, dihedral of total order 2m, m >= 2.
    Dihedral(u64),
    /// `Q(2^n)`, generalized quaternion of order 2^n >= 8.
    Quaternion(u64),
    /// `SD(2^n)`, semidihedral of order 2^n >= 16.
    Semidihedral(u64),
    /// `M(2^n)`, modular maximal-cyclic of order 2^n >= 16.
    Modular(u64),
    /// `Sym(k)`, k <= 6.
    Sym(u32),
    /// `Alt(k)`, k <= 6.
    Alt(u32),
    /// `SL(2,p)`, p prime <= 7.
    SL2(u64),
    /// `PSL(2,p)`, p prime <= 7.
    PSL2(u64),
    /// `SDP(m,t,k)`: C_m-by-C_k semidirect product with action x -> x^t.
    Sdp { m: u64, t: u64, k: u64 },
    /// `ElemAb(q)` = C_q x C_q, q prime.
    ElemAb(u64),
    /// `X(a,b)`: direct product.
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C({n})"),
            GroupSpec::Dihedral(m) => write!(f, "Dih({m})"),
            GroupSpec::Quaternion(o) => write!(f, "Q({o})"),
            GroupSpec::Semidihedral(o) => write!(f, "SD({o})"),
            GroupSpec::Modular(o) => write!(f, "M({o})"),
            GroupSpec::Sym(k) => write!(f, "Sym({k})"),
            GroupSpec::Alt(k) => write!(f, "Alt({k})"),
            GroupSpec::SL2(p) => write!(f, "SL(2,{p})"),
            GroupSpec::PSL2(p) => write!(f, "PSL(2,{p})"),
            GroupSpec::Sdp { m, t, k } => write!(f, "SDP({m},{t},{k})"),
            GroupSpec::ElemAb(q) => write!(f, "ElemAb({q})"),
            GroupSpec::Product(a, b) => write!(f, "X({a},{b})"),
        }
    }
}

impl GroupSpec {
    /// Order of the group the spec describes, without building it.
    pub fn order(&self) -> u64 {
        match self {
            GroupSpec::Cyclic(n) => *n,
            GroupSpec::Dihedral(m) => 2 * m,
            GroupSpec::Quaternion(o) | GroupSpec::Semidihedral(o) | GroupSpec::Modular(o) => *o,
            GroupSpec::Sym(k) => factorial(*k as u64),
            GroupSpec::Alt(k) => factorial(*k as u64).max(2) / 2,
            GroupSpec::SL2(p) => p * (p * p - 1),
            GroupSpec::PSL2(p) => {
                let o = p * (p * p - 1);
                if *p == 2 { o } else { o / 2 }
            }
            GroupSpec::Sdp { m, k, .. } => m * k,
            GroupSpec::ElemAb(q) => q * q,
            GroupSpec::Product(a, b) => a.order() * b.order(),
        }
    }
}

fn factorial(k: u64) -> u64 {
    (1..=k).product::<u64>().max(1)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn is_power_of_two(n: u64) -> bool {
    n > 0 && n & (n - 1) == 0
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, SpecError> {
        Err(SpecError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> Result<(), SpecError> {
        self.skip_ws();
        if self.pos < self.bytes.len() && self.bytes[self.pos] == c {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {:?}", c as char))
        }
    }

    fn ident(&mut self) -> Result<String, SpecError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected a constructor name");
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos]).to_lowercase())
    }

    fn integer(&mut self) -> Result<u64, SpecError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err("integer out of range"))
    }

    fn spec(&mut self) -> Result<GroupSpec, SpecError> {
        let name = self.ident()?;
        self.eat(b'(')?;
        let spec = match name.as_str() {
            "c" => GroupSpec::Cyclic(self.integer()?),
            "dih" => GroupSpec::Dihedral(self.integer()?),
            "q" => GroupSpec::Quaternion(self.integer()?),
            "sd" => GroupSpec::Semidihedral(self.integer()?),
            "m" => GroupSpec::Modular(self.integer()?),
            "sym" => GroupSpec::Sym(self.integer()? as u32),
            "alt" => GroupSpec::Alt(self.integer()? as u32),
            "sl" | "psl" => {
                let two = self.integer()?;
                if two != 2 {
                    return Err(SpecError::Domain(format!("{name}({two},_): only degree 2")));
                }
                self.eat(b',')?;
                let p = self.integer()?;
                if name == "sl" {
                    GroupSpec::SL2(p)
                } else {
                    GroupSpec::PSL2(p)
                }
            }
            "sdp" => {
                let m = self.integer()?;
                self.eat(b',')?;
                let t = self.integer()?;
                self.eat(b',')?;
                let k = self.integer()?;
                GroupSpec::Sdp { m, t, k }
            }
            "elemab" => GroupSpec::ElemAb(self.integer()?),
            "x" => {
                let a = self.spec()?;
                self.eat(b',')?;
                let b = self.spec()?;
                GroupSpec::Product(Box::new(a), Box::new(b))
            }
            other => return self.err(format!("unknown constructor {other:?}")),
        };
        self.eat(b')')?;
        Ok(spec)
    }
}

fn validate(spec: &GroupSpec) -> Result<(), SpecError> {
    match spec {
        GroupSpec::Cyclic(n) => {
            if *n < 1 {
                return Err(SpecError::Domain("C(n) requires n >= 1".into()));
            }
        }
        GroupSpec::Dihedral(m) => {
            if *m < 2 {
                return Err(SpecError::Domain("Dih(m) requires m >= 2".into()));
            }
        }
        GroupSpec::Quaternion(o) => {
            if !is_power_of_two(*o) || *o < 8 {
                return Err(SpecError::Domain(format!("Q({o}): order must be 2^n >= 8")));
            }
        }
        GroupSpec::Semidihedral(o) => {
            if !is_power_of_two(*o) || *o < 16 {
                return Err(SpecError::Domain(format!("SD({o}): order must be 2^n >= 16")));
            }
        }
        GroupSpec::Modular(o) => {
            if !is_power_of_two(*o) || *o < 16 {
                return Err(SpecError::Domain(format!("M({o}): order must be 2^n >= 16")));
            }
        }
        GroupSpec::Sym(k) | GroupSpec::Alt(k) => {
            if *k < 1 || *k > 6 {
                return Err(SpecError::Domain(format!("Sym/Alt({k}): k must be in 1..=6")));
            }
        }
        GroupSpec::SL2(p) | GroupSpec::PSL2(p) => {
            if !is_prime(*p) || *p > 7 {
                return Err(SpecError::Domain(format!("SL/PSL(2,{p}): p must be a prime <= 7")));
            }
        }
        GroupSpec::Sdp { m, t, k } => {
            if *m < 1 || *k < 1 {
                return Err(SpecError::Domain("SDP(m,t,k) requires m,k >= 1".into()));
            }
            let t = t % m.max(&1);
            if gcd(t, *m) != 1 {
                return Err(SpecError::Domain(format!("SDP: gcd({t},{m}) != 1")));
            }
            if pow_mod(t, *k, *m) != 1 % m {
                return Err(SpecError::Domain(format!("SDP: {t}^{k} != 1 (mod {m})")));
            }
        }
        GroupSpec::ElemAb(q) => {
            if !is_prime(*q) {
                return Err(SpecError::Domain(format!("ElemAb({q}): q must be prime")));
            }
        }
        GroupSpec::Product(a, b) => {
            validate(a)?;
            validate(b)?;
        }
    }
    Ok(())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Parses the group-spec mini-language. Case-insensitive, whitespace ignored.
pub fn parse_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return p.err("trailing input");
    }
    validate(&spec)?;
    Ok(spec)
}

fn make_cyclic(n: u64, cap: usize) -> Result<Group, GroupError> {
    let gens = if n > 1 { vec![1u64] } else { vec![] };
    Group::close_with(0u64, &gens, |a, b| (a + b) % n, cap, format!("C({n})"))
}

/// `C_m`-by-`C_k` semidirect product with action `x -> x^t`:
/// `(a,b)(c,d) = (a + t^b c mod m, b + d mod k)`.
fn make_sdp(m: u64, t: u64, k: u64, cap: usize, label: String) -> Result<Group, GroupError> {
    let tpow: Vec<u64> = (0..k).scan(1u64, |acc, _| {
        let cur = *acc;
        *acc = *acc * (t % m) % m;
        Some(cur)
    }).collect();
    let mul = move |p: &(u64, u64), q: &(u64, u64)| {
        let (a, b) = *p;
        let (c, d) = *q;
        ((a + tpow[b as usize] * c) % m, (b + d) % k)
    };
    let mut gens = Vec::new();
    if m > 1 {
        gens.push((1, 0));
    }
    if k > 1 {
        gens.push((0, 1));
    }
    Group::close_with((0u64, 0u64), &gens, mul, cap, label)
}

fn make_quaternion(order: u64, cap: usize) -> Result<Group, GroupError> {
    // x^{m} = 1, y^2 = x^{m/2}, y x y^-1 = x^-1, with m = order/2;
    // elements x^a y^b, b in {0,1}.
    let m = order / 2;
    let q = order / 4;
    let mul = move |p: &(u64, u64), r: &(u64, u64)| {
        let (a, b) = *p;
        let (c, d) = *r;
        match (b, d) {
            (0, _) => ((a + c) % m, d),
            (1, 0) => ((m + a - c) % m, 1),
            (1, 1) => ((m + q + a - c) % m, 0),
            _ => unreachable!(),
        }
    };
    Group::close_with((0u64, 0u64), &[(1, 0), (0, 1)], mul, cap, format!("Q({order})"))
}

fn sym_gens(k: u32) -> Vec<Perm> {
    let k = k as usize;
    match k {
        1 => vec![],
        2 => vec![Perm::new(vec![1, 0]).unwrap()],
        _ => {
            let cycle: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
            let mut transposition: Vec<usize> = (0..k).collect();
            transposition.swap(0, 1);
            vec![Perm::new(cycle).unwrap(), Perm::new(transposition).unwrap()]
        }
    }
}

fn alt_gens(k: u32) -> Vec<Perm> {
    let k = k as usize;
    match k {
        1 | 2 => vec![],
        3 => vec![Perm::new(vec![1, 2, 0]).unwrap()],
        _ => {
            let three: Vec<usize> =
                (0..k).map(|i| if i < 3 { (i + 1) % 3 } else { i }).collect();
            let cycle: Vec<usize> = if k % 2 == 1 {
                (0..k).map(|i| (i + 1) % k).collect()
            } else {
                // Even degree: cycle the points 1..k-1, fix 0.
                (0..k).map(|i| if i == 0 { 0 } else { i % (k - 1) + 1 }).collect()
            };
            vec![Perm::new(three).unwrap(), Perm::new(cycle).unwrap()]
        }
    }
}

fn make_sl2(p: u64, cap: usize) -> Result<Group, GroupError> {
    // Closure of the two standard transvections in SL(2,p).
    let mul = move |a: &[u64; 4], b: &[u64; 4]| {
        [
            (a[0] * b[0] + a[1] * b[2]) % p,
            (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p,
        ]
    };
    Group::close_with(
        [1, 0, 0, 1],
        &[[1, 1, 0, 1], [1, 0, 1, 1]],
        mul,
        cap,
        format!("SL(2,{p})"),
    )
}

/// Builds the group a spec describes. Closure never exceeds `cap` elements.
pub fn make(spec: &GroupSpec, cap: usize) -> Result<Group, SpecError> {
    validate(spec)?;
    let label = spec.to_string();
    let g = match spec {
        GroupSpec::Cyclic(n) => make_cyclic(*n, cap)?,
        GroupSpec::Dihedral(m) => make_sdp(*m, m - 1, 2, cap, label.clone())?,
        GroupSpec::Quaternion(o) => make_quaternion(*o, cap)?,
        GroupSpec::Semidihedral(o) => make_sdp(o / 2, o / 4 - 1, 2, cap, label.clone())?,
        GroupSpec::Modular(o) => make_sdp(o / 2, o / 4 + 1, 2, cap, label.clone())?,
        GroupSpec::Sym(k) => Group::build_from_perms(&sym_gens(*k), cap)?,
        GroupSpec::Alt(k) => Group::build_from_perms(&alt_gens(*k), cap)?,
        GroupSpec::SL2(p) => make_sl2(*p, cap)?,
        GroupSpec::PSL2(p) => {
            // SL(2,p) modulo its center {I, -I}.
            let sl = make_sl2(*p, cap)?;
            sl.quotient(&sl.center())?
        }
        GroupSpec::Sdp { m, t, k } => make_sdp(*m, *t, *k, cap, label.clone())?,
        GroupSpec::ElemAb(q) => {
            let c = make_cyclic(*q, cap)?;
            c.direct_product(&c, cap)?
        }
        GroupSpec::Product(a, b) => {
            let ga = make(a, cap)?;
            let gb = make(b, cap)?;
            ga.direct_product(&gb, cap)?
        }
    };
    Ok(g.with_label(label))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusSource {
    Builtin,
    Ingested,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub name: String,
    pub group: Group,
    pub source: CorpusSource,
}

/// Invariant fingerprint used to tell corpus entries apart without an
/// isomorphism test: a necessary-condition match only.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub order_multiset: Vec<u32>,
    pub abelian: bool,
    pub center_orders: Vec<u32>,
    pub class_sizes: Vec<usize>,
    pub normal_subgroup_count: usize,
    pub cyclic_subgroup_count: usize,
}

pub fn fingerprint(g: &Group) -> Fingerprint {
    let mut center_orders: Vec<u32> =
        g.center().iter().map(|i| g.element_order(i).unwrap()).collect();
    center_orders.sort_unstable();
    let mut class_sizes: Vec<usize> = g.conjugacy_classes().iter().map(ElementSet::len).collect();
    class_sizes.sort_unstable();
    Fingerprint {
        order: g.order(),
        order_multiset: g.order_multiset(),
        abelian: g.is_abelian(),
        center_orders,
        class_sizes,
        normal_subgroup_count: g.normal_subgroups_bounded(g.order()).unwrap().len(),
        cyclic_subgroup_count: g.cyclic_subgroups().len(),
    }
}

/// The Pauli group on one qubit: phases `i^k` times `X^a Z^b`. The central
/// product of D8 and C4, one of the two order-16 groups with no simpler
/// constructor in the mini-language.
fn make_pauli16() -> Result<Group, GroupError> {
    let mul = |p: &(u8, u8, u8), q: &(u8, u8, u8)| {
        let (k1, a1, b1) = *p;
        let (k2, a2, b2) = *q;
        ((k1 + k2 + 2 * b1 * a2) % 4, (a1 + a2) % 2, (b1 + b2) % 2)
    };
    Group::close_with((0, 0, 0), &[(0, 1, 0), (0, 0, 1), (1, 0, 0)], mul, 16, "Pauli(16)".into())
}

/// `(C2 x C2) : C4` with the order-4 generator swapping the two factors.
fn make_swap16() -> Result<Group, GroupError> {
    let mul = |p: &(u8, u8, u8), q: &(u8, u8, u8)| {
        let (u1, v1, c1) = *p;
        let (u2, v2, c2) = *q;
        if c1 % 2 == 1 {
            ((u1 + v2) % 2, (v1 + u2) % 2, (c1 + c2) % 4)
        } else {
            ((u1 + u2) % 2, (v1 + v2) % 2, (c1 + c2) % 4)
        }
    };
    Group::close_with((0, 0, 0), &[(1, 0, 0), (0, 0, 1)], mul, 16, "C2^2:C4".into())
}

/// Hand-curated specs for all 42 isomorphism types of order <= 16.
fn curated_small() -> Vec<(&'static str, u64)> {
    // (spec string, order); the two entries without a spec are handled apart.
    vec![
        ("C(1)", 1),
        ("C(2)", 2),
        ("C(3)", 3),
        ("C(4)", 4),
        ("ElemAb(2)", 4),
        ("C(5)", 5),
        ("C(6)", 6),
        ("Sym(3)", 6),
        ("C(7)", 7),
        ("C(8)", 8),
        ("X(C(4),C(2))", 8),
        ("X(X(C(2),C(2)),C(2))", 8),
        ("Dih(4)", 8),
        ("Q(8)", 8),
        ("C(9)", 9),
        ("ElemAb(3)", 9),
        ("C(10)", 10),
        ("Dih(5)", 10),
        ("C(11)", 11),
        ("C(12)", 12),
        ("X(C(6),C(2))", 12),
        ("Dih(6)", 12),
        ("Alt(4)", 12),
        ("SDP(3,2,4)", 12),
        ("C(13)", 13),
        ("C(14)", 14),
        ("Dih(7)", 14),
        ("C(15)", 15),
        ("C(16)", 16),
        ("X(C(8),C(2))", 16),
        ("X(C(4),C(4))", 16),
        ("X(X(C(4),C(2)),C(2))", 16),
        ("X(X(X(C(2),C(2)),C(2)),C(2))", 16),
        ("Dih(8)", 16),
        ("Q(16)", 16),
        ("SD(16)", 16),
        ("M(16)", 16),
        ("X(Dih(4),C(2))", 16),
        ("X(Q(8),C(2))", 16),
        ("SDP(4,3,4)", 16),
    ]
}

/// Odd prime powers up to `bound`, ascending.
fn odd_prime_powers(bound: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for p in (3..=bound).filter(|&p| p % 2 == 1 && is_prime(p)) {
        let mut q = p;
        while q <= bound {
            out.push(q);
            q = match q.checked_mul(p) {
                Some(v) => v,
                None => break,
            };
        }
    }
    out.sort_unstable();
    out
}

/// Deterministic builtin corpus of all groups the verification suites run
/// over: every isomorphism type of order <= 16, the named groups of the
/// non-solvable list, the 2-power families, and the product/semidirect
/// families behind the equality cases, filtered by `max_order`.
pub fn builtin_corpus(max_order: u64) -> Vec<CorpusEntry> {
    let cap = DEFAULT_CAP;
    let mut entries: Vec<CorpusEntry> = Vec::new();
    let push_spec = |entries: &mut Vec<CorpusEntry>, text: &str| {
        let spec = parse_spec(text).expect("builtin spec parses");
        if spec.order() <= max_order {
            let group = make(&spec, cap).expect("builtin spec builds");
            entries.push(CorpusEntry { name: spec.to_string(), group, source: CorpusSource::Builtin });
        }
    };
    for (text, order) in curated_small() {
        if order <= max_order {
            push_spec(&mut entries, text);
        }
    }
    if max_order >= 16 {
        entries.push(CorpusEntry {
            name: "C2^2:C4".into(),
            group: make_swap16().unwrap(),
            source: CorpusSource::Builtin,
        });
        entries.push(CorpusEntry {
            name: "Pauli(16)".into(),
            group: make_pauli16().unwrap(),
            source: CorpusSource::Builtin,
        });
    }
    // Named groups beyond order 16.
    for text in ["Sym(4)", "Alt(5)", "Sym(5)", "SL(2,5)", "X(Alt(5),C(2))", "PSL(2,7)", "X(Alt(5),C(3))"] {
        push_spec(&mut entries, text);
    }
    // 2-power families above the curated range.
    let mut o = 32u64;
    while o <= max_order {
        push_spec(&mut entries, &format!("Dih({})", o / 2));
        push_spec(&mut entries, &format!("Q({o})"));
        push_spec(&mut entries, &format!("SD({o})"));
        push_spec(&mut entries, &format!("M({o})"));
        o *= 2;
    }
    // Product families behind the Theorem B / D / Corollary E equality cases.
    // Orders <= 16 are skipped: the curated list already covers every
    // isomorphism type there.
    for m in (3..).step_by(2).take_while(|m| 6 * m <= max_order) {
        push_spec(&mut entries, &format!("X(Sym(3),C({m}))"));
    }
    for m in (3..).step_by(2).take_while(|m| 8 * m <= max_order) {
        push_spec(&mut entries, &format!("X(Q(8),C({m}))"));
    }
    for m in (5..).step_by(2).take_while(|m| 4 * m <= max_order) {
        push_spec(&mut entries, &format!("X(ElemAb(2),C({m}))"));
    }
    // Dihedral groups of odd cyclic part: SDP(p^e, p^e - 1, 2).
    for q in odd_prime_powers(max_order / 2) {
        if q >= 9 {
            push_spec(&mut entries, &format!("SDP({q},{},2)", q - 1));
        }
    }
    entries.sort_by(|a, b| (a.group.order(), &a.name).cmp(&(b.group.order(), &b.name)));
    entries
}
