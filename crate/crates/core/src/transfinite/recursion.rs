use super::element::EtaElement;
use crate::error::Result;
use crate::ordinal::{ExtOrdinal, Ordinal, Term};

/// `d(0, e)` in `Cay(G_η, S_η)`.
///
/// A successor level adds one step when the new bit is set; a limit level
/// takes the largest distance over the support, since the other coordinates
/// can idle on the identity, which belongs to every `S_ξ`.
pub fn dist_eta(eta: &Ordinal, e: &EtaElement) -> Result<u64> {
    e.validate(eta)?;
    Ok(dist(e))
}

fn dist(e: &EtaElement) -> u64 {
    match e {
        EtaElement::Zero => 0,
        EtaElement::Pair(g, bit) => dist(g) + u64::from(*bit),
        EtaElement::Support(map) => map.values().map(dist).max().unwrap_or(0),
    }
}

/// The label `ℓ_e` in `Cay(G_η, S_η)` rooted at the identity.
///
/// * successor level: `ℓ_{(g,x)} = ℓ_g + [x = 0]`;
/// * limit level, `e ≠ 0`: the largest `ℓ_{e_ξ}` over support coordinates
///   with `d(0, e_ξ) = d(0, e)`;
/// * limit level, `e = 0`: `η` itself.
pub fn label_eta(eta: &Ordinal, e: &EtaElement) -> Result<ExtOrdinal> {
    e.validate(eta)?;
    Ok(ExtOrdinal::Ord(label(eta, e, &|eta| eta.clone())))
}

/// `label_eta(η, 0)`.
pub fn radius_eta(eta: &Ordinal) -> ExtOrdinal {
    ExtOrdinal::Ord(label(eta, &EtaElement::Zero, &|eta| eta.clone()))
}

/// Labels in the truncation of `G_η` that keeps, at every limit level, only
/// the `ξ` whose Cantor-normal-form coefficients are all below `k`. The
/// identity of a truncated limit level then has the largest label of the
/// kept levels.
pub fn label_eta_truncated(eta: &Ordinal, e: &EtaElement, k: u32) -> Result<ExtOrdinal> {
    e.validate(eta)?;
    for xi in support_keys(e) {
        if !kept(&xi, k) {
            return Err(crate::Error::InvalidElement(format!(
                "{e} uses level {xi}, which the truncation k={k} drops"
            )));
        }
    }
    let zero_label = |eta: &Ordinal| -> Ordinal {
        kept_below(eta, k)
            .iter()
            .map(|xi| truncated_zero_label(xi, k))
            .max()
            .unwrap_or_else(Ordinal::zero)
    };
    Ok(ExtOrdinal::Ord(label(eta, e, &zero_label)))
}

fn truncated_zero_label(eta: &Ordinal, k: u32) -> Ordinal {
    if eta.is_zero() {
        return Ordinal::zero();
    }
    match eta.predecessor() {
        Some(xi) => truncated_zero_label(&xi, k).successor(),
        None => kept_below(eta, k)
            .iter()
            .map(|xi| truncated_zero_label(xi, k))
            .max()
            .unwrap_or_else(Ordinal::zero),
    }
}

fn label(eta: &Ordinal, e: &EtaElement, limit_zero: &dyn Fn(&Ordinal) -> Ordinal) -> Ordinal {
    if eta.is_zero() {
        return Ordinal::zero();
    }
    if let Some(xi) = eta.predecessor() {
        let (g, bit) = match e {
            EtaElement::Pair(g, bit) => (g.as_ref(), *bit),
            _ => (&EtaElement::Zero, false),
        };
        let base = label(&xi, g, limit_zero);
        return if bit { base } else { base.successor() };
    }
    match e {
        EtaElement::Support(map) => {
            let d = dist(e);
            map.iter()
                .filter(|(_, g)| dist(g) == d)
                .map(|(xi, g)| label(xi, g, limit_zero))
                .max()
                .expect("support is non-empty")
        }
        _ => limit_zero(eta),
    }
}

fn support_keys(e: &EtaElement) -> Vec<Ordinal> {
    match e {
        EtaElement::Zero => Vec::new(),
        EtaElement::Pair(g, _) => support_keys(g),
        EtaElement::Support(map) => map
            .iter()
            .flat_map(|(xi, g)| std::iter::once(xi.clone()).chain(support_keys(g)))
            .collect(),
    }
}

/// Whether every coefficient of `xi` is below `k`.
pub fn kept(xi: &Ordinal, k: u32) -> bool {
    xi.terms().iter().all(|t| t.coefficient < k as u64)
}

/// The `ξ < η` kept by the truncation with coefficient bound `k`, in
/// increasing order.
pub fn kept_below(eta: &Ordinal, k: u32) -> Vec<Ordinal> {
    let top = eta.leading_exponent().unwrap_or(0);
    let mut out = vec![Vec::<Term>::new()];
    for exponent in (0..=top).rev() {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..k as u64).map(move |c| {
                    let mut p = prefix.clone();
                    if c > 0 {
                        p.push(Term {
                            exponent,
                            coefficient: c,
                        });
                    }
                    p
                })
            })
            .collect();
    }
    let mut kept: Vec<Ordinal> = out
        .into_iter()
        .map(Ordinal::from_terms)
        .filter(|xi| xi < eta)
        .collect();
    kept.sort();
    kept
}
