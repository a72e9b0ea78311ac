//! Combinatorial coefficient families of the local expansions, in exact arithmetic.
//!
//! Notation: `L± ≥ 1` are the half block dimensions `n±/2` of an indefinite
//! model and `L = L⁺ + L⁻ − 2`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{domain, Error, Result};
use crate::exact::{binomial, factorial, rat, sign_pow, two_pow, ExactScalar};
use crate::model::{LocalModel, Sign};

/// Signed binomial sum `c_l = Σ_{l⁺+l⁻=l} (−1)^{l⁺} C(L⁺−1,l⁺) C(L⁻−1,l⁻)`.
pub fn c_l_rational(l_plus: usize, l_minus: usize, l: usize) -> BigRational {
    let (a, b) = (l_plus as i64 - 1, l_minus as i64 - 1);
    let mut acc = BigInt::zero();
    for lp in 0..=l as i64 {
        let lm = l as i64 - lp;
        acc += BigInt::from(sign_pow(lp)) * binomial(a, lp) * binomial(b, lm);
    }
    BigRational::from_integer(acc)
}

pub fn c_l(l_plus: usize, l_minus: usize, l: usize) -> ExactScalar {
    c_l_rational(l_plus, l_minus, l).into()
}

/// Table of `C_{N,m,p,q}` for `1 ≤ m ≤ m_max`, `p + q ≤ m − 1`.
#[derive(Clone, Debug)]
pub struct CTable {
    pub n: usize,
    pub m_max: usize,
    data: Vec<Vec<Vec<BigRational>>>,
}

impl CTable {
    /// Builds the table from the single boundary term at `m = 1` by the
    /// six-case recursion in `m`.
    pub fn build(n: usize, m_max: usize) -> Self {
        let mut data: Vec<Vec<Vec<BigRational>>> = vec![Vec::new()];
        if m_max >= 1 {
            data.push(vec![vec![BigRational::one()]]);
        }
        let nn = n as i64;
        for m in 1..m_max {
            let mi = m as i64;
            let prev = &data[m];
            let get = |p: i64, q: i64| -> BigRational {
                if p < 0 || q < 0 || p + q > mi - 1 {
                    BigRational::zero()
                } else {
                    prev[p as usize][q as usize].clone()
                }
            };
            let lo = (mi - nn).max(0);
            let mut next = vec![Vec::new(); m + 1];
            for p in 0..=m {
                for q in 0..=(m - p) {
                    let (pi, qi) = (p as i64, q as i64);
                    let s = pi + qi;
                    let v = if pi == 0 && qi == mi {
                        two_pow(-mi)
                    } else if s == mi && pi >= 1 {
                        get(pi - 1, qi)
                    } else if s <= mi - 1 && s >= lo && pi >= 1 {
                        get(pi - 1, qi) - rat(nn + 1 - mi + s, 1) * get(pi, qi)
                    } else if pi == 0 && qi <= mi - 1 && qi >= lo {
                        -rat(nn + 1 - mi + qi, 1) * get(0, qi)
                    } else if pi >= 1 && s >= 1 && s <= lo - 1 {
                        get(pi - 1, qi)
                    } else {
                        BigRational::zero()
                    };
                    next[p].push(v);
                }
            }
            data.push(next);
        }
        Self { n, m_max, data }
    }

    /// `C_{N,m,p,q}`; zero outside the stored index range.
    pub fn get(&self, m: usize, p: usize, q: usize) -> BigRational {
        if m == 0 || m > self.m_max || p + q > m - 1 {
            return BigRational::zero();
        }
        self.data[m][p][q].clone()
    }
}

fn check_l(l_plus: usize, l_minus: usize) -> Result<()> {
    if l_plus == 0 || l_minus == 0 {
        return domain("L+ and L- must be positive");
    }
    Ok(())
}

fn big_l(l_plus: usize, l_minus: usize) -> i64 {
    l_plus as i64 + l_minus as i64 - 2
}

/// `2^{−2−L} π (−i)^j`
fn prefactor(big_l: i64, j: i64) -> ExactScalar {
    ExactScalar::term(two_pow(-2 - big_l), 1, 0) * ExactScalar::i_pow(-j)
}

/// `c_{j,k,l} = 2^{−2−L} π (−i)^j (−1)^k C(l,k) c_l / (2^{j−l+k} (j−l+k)!)`.
pub fn c_jkl(l_plus: usize, l_minus: usize, j: usize, k: usize, l: usize) -> Result<ExactScalar> {
    check_l(l_plus, l_minus)?;
    let bl = big_l(l_plus, l_minus);
    if !(k <= l && (l as i64) <= ((k + j) as i64).min(bl)) {
        return domain(format!("c_jkl needs k <= l <= min(k+j, L); got j={j}, k={k}, l={l}, L={bl}"));
    }
    let e = (j + k - l) as i64;
    let q = rat(sign_pow(k as i64), 1)
        * BigRational::from_integer(binomial(l as i64, k as i64))
        * c_l_rational(l_plus, l_minus, l)
        * two_pow(-e)
        / BigRational::from_integer(factorial(e as u64));
    Ok(prefactor(bl, j as i64).scale(&q))
}

/// `c^±_{j,0,p,q} = 2^{−2−L} π (−i)^j Σ_l (∓1)^{L−l+1} c_l C_{L−l,j−l,p,q}/(j−l)!`, `p+q = j−L−1`.
pub fn c_pm_j0pq(l_plus: usize, l_minus: usize, sign: Sign, j: usize, p: usize, q: usize) -> Result<ExactScalar> {
    check_l(l_plus, l_minus)?;
    let bl = big_l(l_plus, l_minus);
    if (j as i64) <= bl {
        return domain(format!("c^±_(j,0,p,q) needs j >= L+1; got j={j}, L={bl}"));
    }
    if (p + q) as i64 != j as i64 - bl - 1 {
        return domain(format!("c^±_(j,0,p,q) needs p+q = j-L-1; got p={p}, q={q}, j={j}, L={bl}"));
    }
    let mut sum = BigRational::zero();
    for l in 0..=bl as usize {
        let table = CTable::build(bl as usize - l, j - l);
        let c = table.get(j - l, p, q);
        if c.is_zero() {
            continue;
        }
        let s = match sign {
            Sign::Plus => sign_pow(bl - l as i64 + 1),
            Sign::Minus => 1,
        };
        sum += rat(s, 1) * c_l_rational(l_plus, l_minus, l) * c / BigRational::from_integer(factorial((j - l) as u64));
    }
    Ok(prefactor(bl, j as i64).scale(&sum))
}

/// Closed form of `c^±_{L+1,0,0,0} = 2^{−2−L} π (−i)^{L−1} Σ_l (±1)^{L−l+1} c_l/(L−l+1)`.
pub fn c_pm_leading_closed(l_plus: usize, l_minus: usize, sign: Sign) -> Result<ExactScalar> {
    check_l(l_plus, l_minus)?;
    let bl = big_l(l_plus, l_minus);
    let mut sum = BigRational::zero();
    for l in 0..=bl {
        let s = match sign {
            Sign::Plus => 1,
            Sign::Minus => sign_pow(bl - l + 1),
        };
        sum += rat(s, bl - l + 1) * c_l_rational(l_plus, l_minus, l as usize);
    }
    Ok(ExactScalar::term(two_pow(-2 - bl), 1, 0) * ExactScalar::i_pow(-(bl - 1)) * ExactScalar::rational(sum))
}

/// Definite-case `c_{j,k} = π C(L−1,k) i^j / (j+k+1−L)!`, `L = d/2 ≥ 1`.
pub fn c_def_jk(big_l: usize, j: usize, k: usize) -> Result<ExactScalar> {
    if big_l == 0 {
        return domain("definite coefficients need L >= 1");
    }
    if k + 1 > big_l || j + k + 1 < big_l {
        return domain(format!("c_(j,k) needs k <= L-1 and j+k+1 >= L; got j={j}, k={k}, L={big_l}"));
    }
    let q = BigRational::from_integer(binomial(big_l as i64 - 1, k as i64))
        / BigRational::from_integer(factorial((j + k + 1 - big_l) as u64));
    Ok(ExactScalar::term(q, 1, j as i64))
}

fn check_block_dims(n_plus: usize, n_minus: usize) -> Result<()> {
    if n_plus < 2 || n_minus < 2 || n_plus % 2 == 1 || n_minus % 2 == 1 {
        return domain(format!("N^± needs even n± >= 2; got ({n_plus}, {n_minus})"));
    }
    Ok(())
}

/// `N^± = ±(−1)^{n⁻/2−1} Σ_{j=0}^{n^∓/2−1} C(d/2−1, j)`.
pub fn n_pm(n_plus: usize, n_minus: usize, sign: Sign) -> Result<i64> {
    check_block_dims(n_plus, n_minus)?;
    let half = ((n_plus + n_minus) / 2) as i64;
    let upper = match sign {
        Sign::Plus => n_minus / 2 - 1,
        Sign::Minus => n_plus / 2 - 1,
    } as i64;
    let sum: BigInt = (0..=upper).map(|j| binomial(half - 1, j)).sum();
    let s = sign.value() * sign_pow(n_minus as i64 / 2 - 1);
    Ok(s * i64::try_from(sum).map_err(|_| Error::Domain("N^± overflow".into()))?)
}

/// `N^±` from the unsimplified double sum.
pub fn n_pm_raw(n_plus: usize, n_minus: usize, sign: Sign) -> Result<BigRational> {
    check_block_dims(n_plus, n_minus)?;
    let half = ((n_plus + n_minus) / 2) as i64;
    let (lp, lm) = (n_plus / 2, n_minus / 2);
    let mut sum = BigRational::zero();
    for l in 0..=(half - 2) {
        let e = half - l - 1;
        let s = match sign {
            Sign::Plus => 1,
            Sign::Minus => sign_pow(e),
        };
        sum += rat(s, e) * c_l_rational(lp, lm, l as usize);
    }
    let pre = BigRational::new(
        BigInt::from(sign_pow(half)) * factorial((half - 1) as u64),
        factorial((lp - 1) as u64) * factorial((lm - 1) as u64),
    );
    Ok(pre * sum)
}

/// `Σ_l 1/(p+q−l+1) Σ_{j+k=l} (−1)^j C(p,j) C(q,k)` against
/// `(−1)^p p! q!/(p+q+1)! Σ_{j=0}^{q} C(p+q+1, j)`.
pub fn pinelis_identity_check(p: usize, q: usize) -> bool {
    let (lhs, rhs) = pinelis_sides(p, q);
    lhs == rhs
}

pub fn pinelis_sides(p: usize, q: usize) -> (BigRational, BigRational) {
    let (pi, qi) = (p as i64, q as i64);
    let mut lhs = BigRational::zero();
    for l in 0..=(pi + qi) {
        let mut inner = BigInt::zero();
        for j in 0..=l {
            inner += BigInt::from(sign_pow(j)) * binomial(pi, j) * binomial(qi, l - j);
        }
        lhs += BigRational::new(inner, BigInt::from(pi + qi - l + 1));
    }
    let s: BigInt = (0..=qi).map(|j| binomial(pi + qi + 1, j)).sum();
    let rhs = BigRational::new(
        BigInt::from(sign_pow(pi)) * factorial(p as u64) * factorial(q as u64) * s,
        factorial((p + q + 1) as u64),
    );
    (lhs, rhs)
}

/// `C_F = (2π)² (πi)^{d/2−1} / (Λ_F (d/2−1)!)`.
pub fn c_f(model: &LocalModel) -> ExactScalar {
    let h = model.codim() / 2;
    let q = rat(4, 1)
        / (BigRational::from_integer(BigInt::from(model.lambda())) * BigRational::from_integer(factorial(h as u64 - 1)));
    ExactScalar::term(q, 2 + h as i32 - 1, h as i64 - 1)
}

/// Constants carried by the fixed component at order `j_F = d/2 − 1`.
#[derive(Clone, Debug, PartialEq)]
pub enum LeadingConstants {
    Definite { c_f: ExactScalar, d: ExactScalar },
    Indefinite { c_f: ExactScalar, d_plus: ExactScalar, d_minus: ExactScalar },
}

pub fn leading_constants(model: &LocalModel) -> Result<LeadingConstants> {
    let cf = c_f(model);
    if model.is_definite() {
        let h = model.codim() as i64 / 2;
        let d = cf.scale(&two_pow(h - 1));
        Ok(LeadingConstants::Definite { c_f: cf, d })
    } else {
        let np = n_pm(model.n_plus, model.n_minus, Sign::Plus)?;
        let nm = n_pm(model.n_plus, model.n_minus, Sign::Minus)?;
        Ok(LeadingConstants::Indefinite {
            d_plus: &ExactScalar::int(np) * &cf,
            d_minus: &ExactScalar::int(nm) * &cf,
            c_f: cf,
        })
    }
}

/// One exact coefficient in a [`CoeffTable`].
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffEntry {
    pub name: String,
    pub indices: Vec<i64>,
    pub value: ExactScalar,
}

/// Exact coefficient tables for one `(L⁺, L⁻)` pair up to order `M`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffTable {
    pub l_plus: usize,
    pub l_minus: usize,
    pub big_l: i64,
    pub entries: Vec<CoeffEntry>,
}

impl CoeffTable {
    /// Collects `c_l`, `C_{N,m,p,q}`, `c_{j,k,l}` and `c^±_{j,0,p,q}` for `j ≤ M`.
    pub fn build(l_plus: usize, l_minus: usize, order: usize) -> Result<Self> {
        check_l(l_plus, l_minus)?;
        let bl = big_l(l_plus, l_minus);
        let mut entries = Vec::new();
        let mut push = |name: &str, indices: Vec<i64>, value: ExactScalar| {
            entries.push(CoeffEntry { name: name.to_string(), indices, value });
        };
        for l in 0..=bl.max(0) as usize {
            push("c_l", vec![l as i64], c_l(l_plus, l_minus, l));
        }
        let m_max = order + bl.max(0) as usize + 1;
        for n in 0..=bl.max(0) as usize {
            let t = CTable::build(n, m_max);
            for m in 1..=m_max {
                for p in 0..m {
                    for q in 0..(m - p) {
                        let v = t.get(m, p, q);
                        if !v.is_zero() {
                            push("C", vec![n as i64, m as i64, p as i64, q as i64], v.into());
                        }
                    }
                }
            }
        }
        for j in 0..=order {
            for k in 0..=bl.max(0) as usize {
                for l in k..=((k + j) as i64).min(bl).max(0) as usize {
                    if l < k {
                        continue;
                    }
                    push("c_jkl", vec![j as i64, k as i64, l as i64], c_jkl(l_plus, l_minus, j, k, l)?);
                }
            }
        }
        for j in (bl + 1).max(0) as usize..=order {
            let s = j - (bl + 1) as usize;
            for p in 0..=s {
                let q = s - p;
                push("c_plus_j0pq", vec![j as i64, p as i64, q as i64], c_pm_j0pq(l_plus, l_minus, Sign::Plus, j, p, q)?);
                push("c_minus_j0pq", vec![j as i64, p as i64, q as i64], c_pm_j0pq(l_plus, l_minus, Sign::Minus, j, p, q)?);
            }
        }
        Ok(Self { l_plus, l_minus, big_l: bl, entries })
    }

    /// The table for a model: indefinite tables plus `N^±` and `C_F`, or the
    /// definite `c_{j,k}` with `C_F` and `2^{d/2−1}C_F`.
    pub fn for_model(model: &LocalModel, order: usize) -> Result<Self> {
        let (lp, lm) = (model.l_plus(), model.l_minus());
        let mut table = if model.is_definite() {
            let bl = lp + lm;
            let mut entries = Vec::new();
            for j in 0..=order {
                for k in 0..bl {
                    if j + k + 1 >= bl {
                        entries.push(CoeffEntry { name: "c_jk".into(), indices: vec![j as i64, k as i64], value: c_def_jk(bl, j, k)? });
                    }
                }
            }
            Self { l_plus: lp, l_minus: lm, big_l: bl as i64, entries }
        } else {
            Self::build(lp, lm, order)?
        };
        let mut push = |name: &str, value: ExactScalar| {
            table.entries.push(CoeffEntry { name: name.into(), indices: Vec::new(), value });
        };
        match leading_constants(model)? {
            LeadingConstants::Definite { c_f, d } => {
                push("C_F", c_f);
                push("D_F", d);
            }
            LeadingConstants::Indefinite { c_f, .. } => {
                push("N_plus", ExactScalar::int(n_pm(model.n_plus, model.n_minus, Sign::Plus)?));
                push("N_minus", ExactScalar::int(n_pm(model.n_plus, model.n_minus, Sign::Minus)?));
                push("C_F", c_f);
            }
        }
        Ok(table)
    }

    pub fn get(&self, name: &str, indices: &[i64]) -> Option<&ExactScalar> {
        self.entries.iter().find(|e| e.name == name && e.indices == indices).map(|e| &e.value)
    }

    /// Plain-text form: one line per term, `name indices num/den pi_power i_power`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# L_plus={} L_minus={} L={}", self.l_plus, self.l_minus, self.big_l);
        for e in &self.entries {
            write_entry(&mut out, &e.name, &e.indices, &e.value);
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize, i64)> = None;
        let mut entries: Vec<CoeffEntry> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let mut vals = [0i64; 3];
                for (slot, tok) in vals.iter_mut().zip(rest.split_whitespace()) {
                    let v = tok.split('=').nth(1).ok_or_else(|| parse_err(lineno, "bad header"))?;
                    *slot = v.parse().map_err(|_| parse_err(lineno, "bad header value"))?;
                }
                header = Some((vals[0] as usize, vals[1] as usize, vals[2]));
                continue;
            }
            let (name, indices, value) = parse_entry(line).ok_or_else(|| parse_err(lineno, "malformed entry"))?;
            match entries.last_mut() {
                Some(last) if last.name == name && last.indices == indices => last.value += value,
                _ => entries.push(CoeffEntry { name, indices, value }),
            }
        }
        let (l_plus, l_minus, big_l) = header.ok_or_else(|| Error::Config("missing table header".into()))?;
        Ok(Self { l_plus, l_minus, big_l, entries })
    }
}

fn parse_err(lineno: usize, msg: &str) -> Error {
    Error::Config(format!("coefficient table line {}: {}", lineno + 1, msg))
}

pub(crate) fn write_entry(out: &mut String, name: &str, indices: &[i64], value: &ExactScalar) {
    let idx = if indices.is_empty() {
        "-".to_string()
    } else {
        indices.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    };
    if value.is_zero() {
        let _ = writeln!(out, "{name} {idx} 0/1 0 0");
    }
    for (a, b, q) in value.terms() {
        let _ = writeln!(out, "{name} {idx} {}/{} {a} {b}", q.numer(), q.denom());
    }
}

fn parse_entry(line: &str) -> Option<(String, Vec<i64>, ExactScalar)> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != 5 {
        return None;
    }
    let indices = if toks[1] == "-" {
        Vec::new()
    } else {
        toks[1].split(',').map(|s| s.parse().ok()).collect::<Option<Vec<i64>>>()?
    };
    let (n, d) = toks[2].split_once('/')?;
    let q = BigRational::new(BigInt::from_str(n).ok()?, BigInt::from_str(d).ok()?);
    let a: i32 = toks[3].parse().ok()?;
    let b: i64 = toks[4].parse().ok()?;
    Some((toks[0].to_string(), indices, ExactScalar::term(q, a, b)))
}
