use std::sync::{Mutex, OnceLock};

use rug::{Integer, Rational};

use crate::mpnum::ExactRational;

fn table() -> &'static Mutex<Vec<Rational>> {
    static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![Rational::from(1)]))
}

/// Bernoulli number `B_n` with `B_1 = −1/2`, from
/// `Σ_{k=0}^{n} C(n+1, k) B_k = 0`. Values are cached.
pub fn bernoulli(n: usize) -> ExactRational {
    ExactRational::from_rug(bernoulli_rug(n))
}

pub(crate) fn bernoulli_rug(n: usize) -> Rational {
    let mut t = table().lock().expect("bernoulli cache poisoned");
    while t.len() <= n {
        let m = t.len();
        if m > 1 && m % 2 == 1 {
            t.push(Rational::new());
            continue;
        }
        let mut acc = Rational::new();
        let mut binom = Integer::from(1);
        for (k, b) in t.iter().enumerate() {
            if *b != 0 {
                acc += Rational::from(&binom * b);
            }
            binom *= (m + 1 - k) as u32;
            binom /= (k + 1) as u32;
        }
        // binom is now C(m+1, m)
        t.push(-acc / binom);
    }
    t[n].clone()
}
