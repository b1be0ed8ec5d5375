//! Bernoulli numbers in the positive (Hirzebruch) convention:
//! B_1 = 1/6, B_2 = 1/30, B_3 = 1/42, B_4 = 1/30, ...
//!
//! These are the absolute values of the classical even-index Bernoulli
//! numbers, the convention used throughout the L-genus and A-hat genus
//! literature.

use std::sync::Mutex;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::rat::{binomial, rat_int, Rational};

// Classical Bernoulli numbers b_n (b_1 = -1/2), grown on demand.
// A mutex keeps concurrent fills race-free; the table is tiny.
fn classical_table() -> &'static Mutex<Vec<Rational>> {
    static TABLE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(vec![rat_int(1)]))
}

fn classical(n: usize) -> Rational {
    let mut table = classical_table().lock().unwrap();
    while table.len() <= n {
        let m = table.len();
        // sum_{k=0}^{m} C(m+1, k) b_k = 0.
        let mut acc = Rational::zero();
        for (k, bk) in table.iter().enumerate() {
            acc += Rational::from_integer(binomial(m as u32 + 1, k as u32)) * bk;
        }
        let bm = -acc / rat_int(m as i64 + 1);
        table.push(bm);
    }
    table[n].clone()
}

/// B_j in the positive convention. `j = 0` is rejected: the two common
/// conventions disagree there and nothing in this crate needs it.
pub fn bernoulli(j: u32) -> Rational {
    assert!(j >= 1, "bernoulli(0) is rejected; use j >= 1");
    let b = classical(2 * j as usize);
    if j.is_multiple_of(2) {
        -b
    } else {
        b
    }
}
