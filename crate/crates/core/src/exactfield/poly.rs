use super::gaussian::Gaussian;

/// Dense univariate polynomial in `q` over the Gaussian rationals,
/// coefficients stored low degree first with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct QPoly {
    pub(crate) coeffs: Vec<Gaussian>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Gaussian) -> Self {
        let mut p = QPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    pub fn one() -> Self {
        QPoly::constant(Gaussian::one())
    }

    /// `c·q^k`
    pub fn monomial(c: Gaussian, k: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Gaussian::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> Option<&Gaussian> {
        self.coeffs.last()
    }

    /// Number of nonzero coefficients.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let c = match (self.coeffs.get(k), rhs.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            coeffs.push(c);
        }
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        if rhs.coeffs.len() == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        if self.coeffs.len() == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        let mut coeffs = vec![Gaussian::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        let mut p = QPoly { coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: &Gaussian) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division; `rhs` must be nonzero.
    pub fn divrem(&self, rhs: &QPoly) -> (QPoly, QPoly) {
        let d = rhs.degree().expect("division by zero polynomial");
        let lc_inv = rhs.lc().unwrap().inv().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![Gaussian::zero(); self.coeffs.len().saturating_sub(d).max(1)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let c = rem.lc().unwrap() * &lc_inv;
            let shift = rd - d;
            for (k, b) in rhs.coeffs.iter().enumerate() {
                rem.coeffs[k + shift] = &rem.coeffs[k + shift] - &(&c * b);
            }
            quot[shift] = c;
            rem.trim();
        }
        let mut q = QPoly { coeffs: quot };
        q.trim();
        (q, rem)
    }

    pub fn exact_div(&self, rhs: &QPoly) -> QPoly {
        let (q, r) = self.divrem(rhs);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> QPoly {
        match self.lc() {
            None => QPoly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().unwrap()),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, rhs: &QPoly) -> QPoly {
        if self.is_constant() && !self.is_zero() || rhs.is_constant() && !rhs.is_zero() {
            return QPoly::one();
        }
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &Gaussian) -> Gaussian {
        let mut acc = Gaussian::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Renders the polynomial with exponents shifted by `shift` (so negative
    /// powers of `q` can be displayed).
    pub fn render(&self, shift: i64) -> String {
        let mut parts: Vec<(bool, String)> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = k as i64 - shift;
            let zero = num_rational::BigRational::from_integer(0.into());
            let negative = (c.is_real() && c.re < zero) || (c.re.is_zero_like() && c.im < zero);
            let (neg, mag) = if negative { (true, -c) } else { (false, c.clone()) };
            let coeff = if mag.is_atomic() {
                format!("{mag}")
            } else {
                format!("({mag})")
            };
            let body = match e {
                0 if parts.is_empty() => format!("{mag}"),
                0 => coeff,
                _ => {
                    let var = if e == 1 { "q".to_string() } else { format!("q^{e}") };
                    if mag.is_one() {
                        var
                    } else {
                        format!("{coeff}*{var}")
                    }
                }
            };
            parts.push((neg, body));
        }
        if parts.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (neg, body)) in parts.into_iter().enumerate() {
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

trait ZeroLike {
    fn is_zero_like(&self) -> bool;
}

impl ZeroLike for num_rational::BigRational {
    fn is_zero_like(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
}
