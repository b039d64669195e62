//! Catalog constructions and the group-spec grammar:
//!
//! ```text
//! spec := atom ("x" atom)*
//! atom := "Z" int | "D" int | "Q8" | "S" int | "A" int | "file:" path
//! ```
//!
//! A `file:` atom takes the rest of the string as its path, so it must be
//! the last atom.

use std::path::Path;

use super::FiniteGroup;
use crate::permgroup::Perm;
use crate::{Caps, Error, Result};

/// Parses a spec with the default caps.
pub fn from_catalog(spec: &str) -> Result<FiniteGroup> {
    parse_group_spec(spec, &Caps::default())
}

pub fn parse_group_spec(text: &str, caps: &Caps) -> Result<FiniteGroup> {
    let atoms = tokenize(text)?;
    let order = atoms
        .iter()
        .try_fold(1u128, |acc, a| Ok::<_, Error>(acc.saturating_mul(a.order_hint()?)))?;
    if order > caps.group_order as u128 {
        return Err(Error::CapExceeded {
            what: "group order",
            size: order,
            cap: caps.group_order as u128,
        });
    }
    let mut factors = Vec::with_capacity(atoms.len());
    for atom in &atoms {
        factors.push(atom.build(caps)?);
    }
    let group = if factors.len() == 1 {
        factors.pop().expect("one factor")
    } else {
        direct_product(&factors)?
    };
    if group.order() > caps.group_order {
        return Err(Error::CapExceeded {
            what: "group order",
            size: group.order() as u128,
            cap: caps.group_order as u128,
        });
    }
    Ok(group.renamed(text.trim()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Atom {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion,
    Symmetric(usize),
    Alternating(usize),
    File(String),
}

impl Atom {
    /// Order of the group, or 1 for files (checked after loading).
    fn order_hint(&self) -> Result<u128> {
        Ok(match *self {
            Atom::Cyclic(n) => n as u128,
            Atom::Dihedral(n) => 2 * n as u128,
            Atom::Quaternion => 8,
            Atom::Symmetric(n) => factorial(n),
            Atom::Alternating(n) => (factorial(n) / 2).max(1),
            Atom::File(_) => 1,
        })
    }

    fn build(&self, caps: &Caps) -> Result<FiniteGroup> {
        match self {
            Atom::Cyclic(n) => cyclic(*n),
            Atom::Dihedral(n) => dihedral(*n),
            Atom::Quaternion => quaternion(),
            Atom::Symmetric(n) => symmetric(*n, false),
            Atom::Alternating(n) => symmetric(*n, true),
            Atom::File(path) => FiniteGroup::load_json(Path::new(path), caps),
        }
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).fold(1u128, |a, k| a.saturating_mul(k))
}

fn tokenize(text: &str) -> Result<Vec<Atom>> {
    let s = text.trim();
    let bytes = s.as_bytes();
    let err = |position: usize, message: &str| Error::Parse {
        position,
        message: message.to_string(),
    };
    let mut atoms = Vec::new();
    let mut pos = 0;
    if s.is_empty() {
        return Err(err(0, "empty group spec"));
    }
    loop {
        if s[pos..].starts_with("file:") {
            let path = &s[pos + 5..];
            if path.is_empty() {
                return Err(err(pos + 5, "missing path after 'file:'"));
            }
            atoms.push(Atom::File(path.to_string()));
            return Ok(atoms);
        }
        if s[pos..].starts_with("Q8") {
            atoms.push(Atom::Quaternion);
            pos += 2;
        } else {
            let kind = bytes[pos];
            if !matches!(kind, b'Z' | b'D' | b'S' | b'A') {
                return Err(err(pos, "expected one of Z, D, Q8, S, A, file:"));
            }
            let start = pos + 1;
            let mut end = start;
            while end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            }
            if end == start {
                return Err(err(start, "expected an integer"));
            }
            let n: usize = s[start..end].parse().map_err(|_| err(start, "integer too large"))?;
            let atom = match kind {
                b'Z' if n >= 1 => Atom::Cyclic(n),
                b'D' if n >= 1 => Atom::Dihedral(n),
                b'S' if n >= 1 => Atom::Symmetric(n),
                b'A' if n >= 1 => Atom::Alternating(n),
                _ => return Err(err(start, "parameter must be at least 1")),
            };
            atoms.push(atom);
            pos = end;
        }
        if pos == bytes.len() {
            return Ok(atoms);
        }
        if bytes[pos] != b'x' {
            return Err(err(pos, "expected 'x' between factors"));
        }
        pos += 1;
        if pos == bytes.len() {
            return Err(err(pos, "expected a factor after 'x'"));
        }
    }
}

fn cyclic(n: usize) -> Result<FiniteGroup> {
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::from_fn(format!("Z{n}"), n, labels, |a, b| (a + b) % n)
}

/// `D_n` of order `2n`; index `k + n*e` is `r^k s^e`.
fn dihedral(n: usize) -> Result<FiniteGroup> {
    let labels = (0..2 * n)
        .map(|i| {
            let (k, e) = (i % n, i / n);
            let r = match k {
                0 if e == 0 => "1".to_string(),
                0 => String::new(),
                1 => "r".to_string(),
                _ => format!("r^{k}"),
            };
            if e == 1 {
                format!("{r}s")
            } else {
                r
            }
        })
        .collect();
    FiniteGroup::from_fn(format!("D{n}"), 2 * n, labels, |a, b| {
        let (k1, e1) = (a % n, a / n);
        let (k2, e2) = (b % n, b / n);
        let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 } % n;
        k + n * (e1 ^ e2)
    })
}

/// Quaternion group: index `2u + sign` for units `u ∈ {1, i, j, k}`.
fn quaternion() -> Result<FiniteGroup> {
    // unit products as (unit, negated)
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let names = ["1", "i", "j", "k"];
    let labels = (0..8)
        .map(|x| {
            let (u, neg) = (x / 2, x % 2 == 1);
            format!("{}{}", if neg { "-" } else { "" }, names[u])
        })
        .collect();
    FiniteGroup::from_fn("Q8", 8, labels, |a, b| {
        let (u, su) = (a / 2, a % 2);
        let (v, sv) = (b / 2, b % 2);
        let (w, neg) = UNIT[u][v];
        2 * w + ((su + sv + neg as usize) % 2)
    })
}

/// `S_n` (or `A_n` when `even_only`) as permutations of `0..n` in
/// lexicographic order; the product `a·b` applies `b` first.
fn symmetric(n: usize, even_only: bool) -> Result<FiniteGroup> {
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        let p = Perm::new(current.clone())?;
        let even = p.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0;
        if !even_only || even {
            perms.push(p);
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    let index: std::collections::HashMap<Perm, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let labels = perms.iter().map(|p| p.to_string()).collect();
    let name = if even_only { format!("A{n}") } else { format!("S{n}") };
    FiniteGroup::from_fn(name, perms.len(), labels, |a, b| index[&perms[a].compose(&perms[b])])
}

pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Direct product with mixed-radix indexing: `(a_1, …, a_k)` is
/// `((a_1 · n_2 + a_2) · n_3 + …)`.
fn direct_product(factors: &[FiniteGroup]) -> Result<FiniteGroup> {
    let sizes: Vec<usize> = factors.iter().map(|g| g.order()).collect();
    let order: usize = sizes.iter().product();
    let decode = |mut x: usize| {
        let mut digits = vec![0; sizes.len()];
        for (d, &n) in digits.iter_mut().zip(&sizes).rev() {
            *d = x % n;
            x /= n;
        }
        digits
    };
    let encode = |digits: &[usize]| digits.iter().zip(&sizes).fold(0, |acc, (&d, &n)| acc * n + d);
    let labels = (0..order)
        .map(|x| {
            let parts: Vec<&str> = decode(x).iter().zip(factors).map(|(&d, g)| g.label(d)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let name: Vec<&str> = factors.iter().map(|g| g.name()).collect();
    FiniteGroup::from_fn(name.join("x"), order, labels, |a, b| {
        let (da, db) = (decode(a), decode(b));
        let prod: Vec<usize> = factors.iter().enumerate().map(|(i, g)| g.mul(da[i], db[i])).collect();
        encode(&prod)
    })
}

/// Catalog specs of order at most `max_order`, one per isomorphism type
/// within the catalog families: cyclic groups, non-cyclic abelian groups in
/// invariant-factor form, dihedral `D_n` (`n ≥ 3`, so `D3` stands for `S3`),
/// `Q8`, and `S_n`, `A_n` for `n ≥ 4`.
pub fn catalog_specs(max_order: usize) -> Vec<String> {
    let mut out: Vec<(usize, String)> = Vec::new();
    for n in 1..=max_order {
        out.push((n, format!("Z{n}")));
    }
    let mut stack: Vec<Vec<usize>> = (2..=max_order).map(|d| vec![d]).collect();
    while let Some(factors) = stack.pop() {
        let prod: usize = factors.iter().product();
        if factors.len() >= 2 {
            let name: Vec<String> = factors.iter().map(|d| format!("Z{d}")).collect();
            out.push((prod, name.join("x")));
        }
        let last = *factors.last().expect("nonempty");
        let mut next = last;
        while prod * next <= max_order {
            let mut f = factors.clone();
            f.push(next);
            stack.push(f);
            next += last;
        }
    }
    for n in 3..=max_order / 2 {
        out.push((2 * n, format!("D{n}")));
    }
    if max_order >= 8 {
        out.push((8, "Q8".to_string()));
    }
    for n in 4.. {
        let sym = factorial(n);
        if sym / 2 > max_order as u128 {
            break;
        }
        out.push(((sym / 2) as usize, format!("A{n}")));
        if sym <= max_order as u128 {
            out.push((sym as usize, format!("S{n}")));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.len().cmp(&b.1.len())).then(a.1.cmp(&b.1)));
    out.into_iter().map(|(_, s)| s).collect()
}
