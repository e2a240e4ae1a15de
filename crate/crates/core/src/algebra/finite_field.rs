//! Prime and extension finite fields `F_{p^k}`.
//!
//! Elements are encoded as integers `sum c_i p^i` where `c_i` are the
//! coefficients of the representative polynomial in the generator `t` modulo
//! the field modulus. Fields up to [`TABLE_LIMIT`] elements multiply through
//! discrete log tables.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::primes::{distinct_prime_factors, is_prime};
use super::ring::{Domain, Field, PerfectField, Ring};
use super::upoly::PolyRing;
use crate::error::{Error, Result};

/// Fields with at most this many elements get log/antilog tables.
pub const TABLE_LIMIT: u64 = 1 << 21;
/// Largest supported field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 31;

/// An element of a finite field, meaningful only together with its
/// [`FiniteField`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq(u32);

impl Fq {
    pub fn code(self) -> u32 {
        self.0
    }

    pub fn from_code(code: u32) -> Fq {
        Fq(code)
    }
}

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct FieldData {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus of degree `k` over `F_p`, constant term first.
    modulus: Vec<u32>,
    tables: Option<Tables>,
}

#[derive(Clone)]
pub struct FiniteField {
    data: Arc<FieldData>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k() == 1 {
            write!(f, "F_{}", self.p())
        } else {
            write!(f, "F_{}^{}", self.p(), self.k())
        }
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.p == other.data.p
                && self.data.k == other.data.k
                && self.data.modulus == other.data.modulus)
    }
}

impl Eq for FiniteField {}

fn registry() -> &'static Mutex<HashMap<(u32, u32), FiniteField>> {
    static REG: OnceLock<Mutex<HashMap<(u32, u32), FiniteField>>> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

impl FiniteField {
    /// The field with `p^k` elements. The modulus is the monic irreducible
    /// polynomial of degree `k` whose lower coefficients, read as base-`p`
    /// digits with the constant term least significant, form the smallest
    /// integer. Fields are cached, so repeated construction is cheap.
    pub fn new(p: u64, k: u32) -> Result<FiniteField> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::InvalidDegreeSplit(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = (p as u128)
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_SIZE as u128);
        let Some(q) = q else {
            return Err(Error::FieldTooLarge { p, k });
        };
        let key = (p as u32, k);
        if let Some(f) = registry().lock().expect("field registry").get(&key) {
            return Ok(f.clone());
        }
        let field = Self::build(p as u32, k, q as u32)?;
        registry()
            .lock()
            .expect("field registry")
            .entry(key)
            .or_insert(field.clone());
        Ok(field)
    }

    /// Constructs `F_q` from its cardinality.
    pub fn with_size(q: u64) -> Result<FiniteField> {
        let (p, k) = super::primes::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, k)
    }

    fn build(p: u32, k: u32, q: u32) -> Result<FiniteField> {
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            find_modulus(p, k)?
        };
        let mut data = FieldData {
            p,
            k,
            q,
            modulus,
            tables: None,
        };
        if k > 1 && (q as u64) <= TABLE_LIMIT {
            data.tables = Some(build_tables(&data));
        }
        Ok(FiniteField {
            data: Arc::new(data),
        })
    }

    pub fn p(&self) -> u64 {
        self.data.p as u64
    }

    pub fn k(&self) -> u32 {
        self.data.k
    }

    /// Number of elements.
    pub fn size(&self) -> u64 {
        self.data.q as u64
    }

    /// Modulus coefficients over `F_p`, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.data.modulus
    }

    /// The class of `t` in `F_p[t]/(modulus)`, `None` for prime fields.
    pub fn generator(&self) -> Option<Fq> {
        (self.k() > 1).then_some(Fq(self.data.p))
    }

    pub fn element(&self, code: u64) -> Option<Fq> {
        (code < self.size()).then_some(Fq(code as u32))
    }

    /// Coefficients over `F_p`, constant term first, length `k`.
    pub fn digits(&self, a: Fq) -> Vec<u32> {
        digits(self.data.p, self.data.k, a.0)
    }

    pub fn from_digits(&self, digits: &[u32]) -> Fq {
        let p = self.data.p;
        Fq(digits.iter().rev().fold(0u32, |acc, &d| acc * p + d % p))
    }

    /// The field `F_{q^m}` containing this one.
    pub fn extension(&self, m: u32) -> Result<FiniteField> {
        FiniteField::new(self.p(), self.k() * m)
    }

    /// Whether `a^{p^sub_k} = a`, i.e. `a` lies in the subfield with `p^sub_k` elements.
    pub fn in_subfield(&self, a: Fq, sub_k: u32) -> bool {
        self.pow(&a, self.p().pow(sub_k)) == a
    }

    /// Embedding of this field into `target`, which must have the same
    /// characteristic and a degree divisible by this one.
    pub fn embedding_into(&self, target: &FiniteField) -> Result<Arc<Embedding>> {
        Embedding::get(self, target)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let d = &self.data;
        let (p, k) = (d.p as u64, d.k as usize);
        let x = digits(d.p, d.k, a);
        let y = digits(d.p, d.k, b);
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + xi as u64 * yj as u64) % p;
            }
        }
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                let m = d.modulus[j] as u64;
                prod[i - k + j] = (prod[i - k + j] + (p - c) * m) % p;
            }
            prod[i] = 0;
        }
        prod.iter().take(k).rev().fold(0u64, |acc, &c| acc * p + c) as u32
    }

    fn slow_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = self.from_i64(1).0;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.slow_mul(acc, base);
            }
            base = self.slow_mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn digits(p: u32, k: u32, mut code: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(k as usize);
    for _ in 0..k {
        out.push(code % p);
        code /= p;
    }
    out
}

fn find_modulus(p: u32, k: u32) -> Result<Vec<u32>> {
    let fp = FiniteField::new(p as u64, 1)?;
    let ring = PolyRing::new(fp.clone(), "t");
    let q_lower = (p as u64).pow(k);
    for lower in 0..q_lower {
        let mut coeffs = digits(p, k, lower as u32);
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        let f = ring.from_coeffs(coeffs.iter().map(|&c| Fq(c)).collect());
        if rabin_irreducible(&ring, &f, k)? {
            return Ok(coeffs);
        }
    }
    Err(Error::Internal(format!(
        "no irreducible polynomial of degree {k} over F_{p}"
    )))
}

/// Rabin's test for a monic polynomial of degree `k` over a prime field.
fn rabin_irreducible(
    ring: &PolyRing<FiniteField>,
    f: &super::upoly::UPoly<Fq>,
    k: u32,
) -> Result<bool> {
    let p = ring.base().p();
    let x = ring.gen();
    // frob[i] = x^{p^i} mod f
    let mut frob = vec![ring.rem(&x, f)?];
    for _ in 0..k {
        let last = frob.last().expect("nonempty");
        frob.push(ring.pow_mod(last, &[p], f)?);
    }
    if frob[k as usize] != ring.rem(&x, f)? {
        return Ok(false);
    }
    for r in distinct_prime_factors(k as u64) {
        let h = ring.sub(&frob[(k as u64 / r) as usize], &x);
        if ring.gcd(&h, f)?.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn build_tables(data: &FieldData) -> Tables {
    let field = FiniteField {
        data: Arc::new(FieldData {
            p: data.p,
            k: data.k,
            q: data.q,
            modulus: data.modulus.clone(),
            tables: None,
        }),
    };
    let order = data.q as u64 - 1;
    let primes = distinct_prime_factors(order);
    let generator = (2..data.q)
        .find(|&g| primes.iter().all(|&r| field.slow_pow(g, order / r) != 1))
        .expect("multiplicative group is cyclic");
    let n = order as usize;
    let mut exp = vec![0u32; 2 * n];
    let mut log = vec![0u32; data.q as usize];
    let mut x = 1u32;
    for i in 0..n {
        exp[i] = x;
        exp[i + n] = x;
        log[x as usize] = i as u32;
        x = field.slow_mul(x, generator);
    }
    Tables { exp, log }
}

impl Ring for FiniteField {
    type Element = Fq;

    fn zero(&self) -> Fq {
        Fq(0)
    }
    fn one(&self) -> Fq {
        Fq(1)
    }
    fn is_zero(&self, a: &Fq) -> bool {
        a.0 == 0
    }
    fn is_one(&self, a: &Fq) -> bool {
        a.0 == 1
    }
    fn add(&self, a: &Fq, b: &Fq) -> Fq {
        let d = &self.data;
        if d.k == 1 {
            let s = a.0 as u64 + b.0 as u64;
            return Fq((s % d.p as u64) as u32);
        }
        if d.p == 2 {
            return Fq(a.0 ^ b.0);
        }
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..d.k {
            out += ((x % d.p + y % d.p) % d.p) * place;
            x /= d.p;
            y /= d.p;
            place = place.wrapping_mul(d.p);
        }
        Fq(out)
    }
    fn sub(&self, a: &Fq, b: &Fq) -> Fq {
        self.add(a, &self.neg(b))
    }
    fn neg(&self, a: &Fq) -> Fq {
        let d = &self.data;
        if d.p == 2 || a.0 == 0 {
            return *a;
        }
        if d.k == 1 {
            return Fq(d.p - a.0);
        }
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..d.k {
            out += ((d.p - x % d.p) % d.p) * place;
            x /= d.p;
            place = place.wrapping_mul(d.p);
        }
        Fq(out)
    }
    fn mul(&self, a: &Fq, b: &Fq) -> Fq {
        let d = &self.data;
        if a.0 == 0 || b.0 == 0 {
            return Fq(0);
        }
        if d.k == 1 {
            return Fq(((a.0 as u64 * b.0 as u64) % d.p as u64) as u32);
        }
        match &d.tables {
            Some(t) => Fq(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize]),
            None => Fq(self.slow_mul(a.0, b.0)),
        }
    }
    fn from_i64(&self, n: i64) -> Fq {
        Fq(n.rem_euclid(self.data.p as i64) as u32)
    }
    fn characteristic(&self) -> u64 {
        self.p()
    }
    fn pow(&self, a: &Fq, e: u64) -> Fq {
        let d = &self.data;
        if e == 0 {
            return Fq(1);
        }
        if a.0 == 0 {
            return Fq(0);
        }
        if let Some(t) = &d.tables {
            let n = d.q as u64 - 1;
            let l = (t.log[a.0 as usize] as u64 * (e % n)) % n;
            return Fq(t.exp[l as usize]);
        }
        if d.k == 1 {
            return Fq(super::integers::mod_pow(a.0 as u64, e, d.p as u64) as u32);
        }
        Fq(self.slow_pow(a.0, e))
    }
    fn fmt_element(&self, a: &Fq, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k() == 1 {
            return write!(f, "{}", a.0);
        }
        let ds = self.digits(*a);
        let mut first = true;
        for (i, &c) in ds.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{c}*t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
    fn is_atomic(&self, a: &Fq) -> bool {
        self.k() == 1 || self.digits(*a).iter().filter(|&&c| c != 0).count() <= 1
    }
}

impl Domain for FiniteField {
    fn div_exact(&self, a: &Fq, b: &Fq) -> Option<Fq> {
        (b.0 != 0).then(|| self.div(a, b))
    }
}

impl Field for FiniteField {
    fn inv(&self, a: &Fq) -> Fq {
        assert!(a.0 != 0, "inverse of zero");
        let d = &self.data;
        if let Some(t) = &d.tables {
            let n = d.q - 1;
            return Fq(t.exp[((n - t.log[a.0 as usize]) % n) as usize]);
        }
        self.pow(a, d.q as u64 - 2)
    }
}

impl PerfectField for FiniteField {
    fn pth_root(&self, a: &Fq) -> Fq {
        self.pow(a, self.size() / self.p())
    }
    fn elements(&self) -> Option<Vec<Fq>> {
        Some((0..self.data.q).map(Fq).collect())
    }
}

/// A field homomorphism `F_{p^a} -> F_{p^b}` with `a | b`, determined by the
/// image of the source generator (the smallest root of the source modulus).
pub struct Embedding {
    source: FiniteField,
    target: FiniteField,
    gen_image: Fq,
    images: Vec<Fq>,
    back: HashMap<Fq, Fq>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Embedding({:?} -> {:?})", self.source, self.target)
    }
}

/// Sources with at most this many elements get a full image table.
const EMBED_TABLE_LIMIT: u64 = 1 << 16;

type EmbeddingCache = Mutex<HashMap<(u64, u32, u32), Arc<Embedding>>>;

fn embedding_registry() -> &'static EmbeddingCache {
    static REG: OnceLock<EmbeddingCache> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

impl Embedding {
    fn get(source: &FiniteField, target: &FiniteField) -> Result<Arc<Embedding>> {
        if source.p() != target.p() || !target.k().is_multiple_of(source.k()) {
            return Err(Error::IncompatibleFields {
                src: format!("{}^{}", source.p(), source.k()),
                dst: format!("{}^{}", target.p(), target.k()),
            });
        }
        let key = (source.p(), source.k(), target.k());
        if let Some(e) = embedding_registry().lock().expect("registry").get(&key) {
            return Ok(e.clone());
        }
        let gen_image = if source.k() == 1 {
            Fq(0)
        } else {
            find_root_of_modulus(source, target)?
        };
        let mut emb = Embedding {
            source: source.clone(),
            target: target.clone(),
            gen_image,
            images: Vec::new(),
            back: HashMap::new(),
        };
        if source.size() <= EMBED_TABLE_LIMIT {
            emb.images = (0..source.size() as u32)
                .map(|c| emb.compute(Fq(c)))
                .collect();
            emb.back = emb
                .images
                .iter()
                .enumerate()
                .map(|(i, &b)| (b, Fq(i as u32)))
                .collect();
        }
        let emb = Arc::new(emb);
        embedding_registry()
            .lock()
            .expect("registry")
            .insert(key, emb.clone());
        Ok(emb)
    }

    fn compute(&self, a: Fq) -> Fq {
        let t = &self.target;
        let ds = self.source.digits(a);
        if self.source.k() == 1 {
            return Fq(ds[0]);
        }
        ds.iter().rev().fold(t.zero(), |acc, &c| {
            t.add(&t.mul(&acc, &self.gen_image), &Fq(c))
        })
    }

    pub fn source(&self) -> &FiniteField {
        &self.source
    }

    pub fn target(&self) -> &FiniteField {
        &self.target
    }

    pub fn apply(&self, a: Fq) -> Fq {
        match self.images.get(a.0 as usize) {
            Some(&b) => b,
            None => self.compute(a),
        }
    }

    /// Inverse image of `b`, if `b` lies in the image.
    pub fn preimage(&self, b: Fq) -> Option<Fq> {
        if !self.back.is_empty() {
            return self.back.get(&b).copied();
        }
        (0..self.source.size() as u32)
            .map(Fq)
            .find(|&a| self.compute(a) == b)
    }
}

fn find_root_of_modulus(source: &FiniteField, target: &FiniteField) -> Result<Fq> {
    let eval = |x: Fq| {
        source
            .modulus()
            .iter()
            .rev()
            .fold(target.zero(), |acc, &c| {
                target.add(&target.mul(&acc, &x), &Fq(c))
            })
    };
    let sub_size = source.size();
    let candidates: Box<dyn Iterator<Item = Fq>> = match &target.data.tables {
        Some(t) => {
            let step = (target.size() - 1) / (sub_size - 1);
            Box::new((0..sub_size - 1).map(move |i| Fq(t.exp[(i * step) as usize])))
        }
        None => Box::new((0..target.size() as u32).map(Fq)),
    };
    candidates
        .filter(|&x| eval(x) == target.zero())
        .min()
        .ok_or_else(|| Error::Internal("modulus has no root in the target field".into()))
}
