//! Hopf-algebra axioms for the twisted structure, checked as defect
//! series. The twisted coproduct of a product of generators is expensive,
//! so both expansions cache the conjugated images per PBW monomial.

use std::collections::BTreeMap;

use super::{antipode_twisted, delta_twisted, TwistData};
use crate::series::Series;
use crate::uea::{antipode0, coproduct0, counit, PbwMonomial, TensorElement, UeaElement};

/// Defect series of the five Hopf axioms that the twist must preserve;
/// all zero iff the twisted structure is a Hopf algebra at this order.
#[derive(Clone, Debug)]
pub struct TwistedHopfDefects {
    pub coassociativity: Series,
    pub counit_left: Series,
    pub counit_right: Series,
    pub antipode_left: Series,
    pub antipode_right: Series,
}

impl TwistedHopfDefects {
    pub fn all_zero(&self) -> bool {
        self.coassociativity.is_zero()
            && self.counit_left.is_zero()
            && self.counit_right.is_zero()
            && self.antipode_left.is_zero()
            && self.antipode_right.is_zero()
    }
}

/// Applies the twisted coproduct to leg `leg` of a degree-2 series.
fn expand_leg(
    s: &Series,
    leg: usize,
    d: &TwistData,
    cache: &mut BTreeMap<PbwMonomial, Series>,
) -> Series {
    let order = d.order();
    let mut coeffs = vec![TensorElement::zero(3); order + 1];
    for k in 0..=order {
        for (key, c) in s.coeff(k).terms() {
            let m = &key[leg];
            if !cache.contains_key(m) {
                let image = delta_twisted(d, &UeaElement::monomial(m.clone()));
                cache.insert(m.clone(), image);
            }
            let inner = &cache[m];
            for j in 0..=order - k {
                for (pair, cp) in inner.coeff(j).terms() {
                    let mut new_key = Vec::with_capacity(3);
                    new_key.extend(key[..leg].iter().cloned());
                    new_key.extend(pair.iter().cloned());
                    new_key.extend(key[leg + 1..].iter().cloned());
                    coeffs[k + j].add_term(new_key, c * cp);
                }
            }
        }
    }
    Series::from_coeffs(coeffs)
}

/// Folds `m(S (x) id)` (leg 0) or `m(id (x) S)` (leg 1) through a degree-2
/// series, with the twisted antipode on the chosen leg.
fn fold_antipode(
    s: &Series,
    leg: usize,
    d: &TwistData,
    cache: &mut BTreeMap<PbwMonomial, Series>,
) -> Series {
    let order = d.order();
    let mut out = Series::zero(1, order);
    for k in 0..=order {
        for (key, c) in s.coeff(k).terms() {
            let m = &key[leg];
            if !cache.contains_key(m) {
                let image = antipode_twisted(d, &UeaElement::monomial(m.clone()));
                cache.insert(m.clone(), image);
            }
            let s_m = &cache[m];
            let other = Series::embed(&UeaElement::monomial(key[1 - leg].clone()), order);
            let prod = if leg == 0 {
                s_m.mul(&other)
            } else {
                other.mul(s_m)
            };
            out = out.add(&prod.shift_t(k).scale(c));
        }
    }
    out
}

/// Checks coassociativity, the counit axiom and both antipode axioms for
/// the twisted structure on a single element.
pub fn twisted_hopf_defects(d: &TwistData, x: &UeaElement) -> TwistedHopfDefects {
    let order = d.order();
    let dx = delta_twisted(d, x);

    let mut delta_cache = BTreeMap::new();
    let lhs = expand_leg(&dx, 0, d, &mut delta_cache);
    let rhs = expand_leg(&dx, 1, d, &mut delta_cache);
    let coassociativity = lhs.sub(&rhs);

    let ex = Series::embed(x, order);
    let counit_left = dx.counit_leg(0).sub(&ex);
    let counit_right = dx.counit_leg(1).sub(&ex);

    // m(S (x) id) Delta(x) = eps(x) 1 = m(id (x) S) Delta(x)
    let eps = Series::embed(&UeaElement::scalar(counit(x)), order);
    let mut s_cache = BTreeMap::new();
    let antipode_left = fold_antipode(&dx, 0, d, &mut s_cache).sub(&eps);
    let antipode_right = fold_antipode(&dx, 1, d, &mut s_cache).sub(&eps);

    TwistedHopfDefects {
        coassociativity,
        counit_left,
        counit_right,
        antipode_left,
        antipode_right,
    }
}

/// Setting `t = 0` must recover the undeformed coproduct and antipode;
/// returns both defects.
pub fn classical_limit_defects(d: &TwistData, x: &UeaElement) -> (Series, Series) {
    let order = d.order();
    let delta_defect = delta_twisted(d, x)
        .classical_part()
        .sub(&Series::constant(coproduct0(x), order));
    let antipode_defect = antipode_twisted(d, x)
        .classical_part()
        .sub(&Series::embed(&antipode0(x), order));
    (delta_defect, antipode_defect)
}
