//! Closed forms the computations are checked against.

use crate::asymptotics::{Family, Flavor, GeometryKind};
use crate::interp::UniPoly;
use crate::poly::{rat, Rational};

/// A leading coefficient stated as a polynomial in `d`.
#[derive(Debug, Clone)]
pub struct KnownLeading {
    pub family: Family,
    pub geometry: GeometryKind,
    pub poly: UniPoly,
    pub anchor: &'static str,
}

/// A leading coefficient stated as a combination of Chern numbers:
/// `(c₁³, c₁c₂, c₃)` coefficients.
#[derive(Debug, Clone)]
pub struct KnownChernForm {
    pub family: Family,
    pub coeffs: [Rational; 3],
    pub anchor: &'static str,
}

#[derive(Debug, Clone)]
pub struct KnownThreshold {
    pub family: Family,
    pub geometry: GeometryKind,
    pub threshold: u64,
    pub anchor: &'static str,
}

fn fam(flavor: Flavor, k: u8) -> Family {
    Family::new(flavor, k).expect("k in range")
}

/// `Σ num[i]·d^i / den`.
fn scaled(num: &[i64], den: i64) -> UniPoly {
    UniPoly::new(num.iter().map(|&n| rat(n, den)).collect())
}

pub fn leading_coefficients() -> Vec<KnownLeading> {
    use GeometryKind::*;
    vec![
        KnownLeading {
            family: fam(Flavor::Ds, 1),
            geometry: HypersurfaceP4,
            poly: scaled(&[0, -35, 15], 120),
            anchor: "m⁵/120 · 5d(3d−7)",
        },
        KnownLeading {
            family: fam(Flavor::Ds, 2),
            geometry: HypersurfaceP4,
            poly: scaled(&[0, -4595, 2260, -185], 1_837_080),
            anchor: "m⁷/1837080 · (−5d(37d²−452d+919))",
        },
        KnownLeading {
            family: fam(Flavor::Ds, 3),
            geometry: HypersurfaceP4,
            poly: scaled(&[0, -358_873, 185_559, -20_739, 389], 81_648_000_000),
            anchor: "m⁹/(81648×10⁶) · d(389d³−20739d²+185559d−358873)",
        },
        KnownLeading {
            family: fam(Flavor::Gg, 2),
            geometry: HypersurfaceP4,
            // 8³·7! = 2580480
            poly: scaled(&[0, -765, 375, -30], 2_580_480),
            anchor: "−15m⁸/(8³·7!) · d(51−25d+2d²)",
        },
        KnownLeading {
            family: fam(Flavor::Gg, 3),
            geometry: HypersurfaceP4,
            // 6³·11!·216 = 1862358220800
            poly: scaled(&[0, -34_885, 17_985, -1_980, 36], 1_862_358_220_800),
            anchor: "m¹¹/(6³·11!·216) · d(36d³−1980d²+17985d−34885)",
        },
        KnownLeading {
            family: fam(Flavor::Ds, 1),
            geometry: LogP3,
            poly: scaled(&[-20, 10], 120),
            anchor: "m⁵/120 · (10d−20)",
        },
        KnownLeading {
            family: fam(Flavor::Ds, 2),
            geometry: LogP3,
            poly: UniPoly::new(vec![rat(-1, 129), rat(247, 306_180), rat(-37, 459_270)]),
            anchor: "m⁷(−37/459270 d² + 247/306180 d − 1/129)",
        },
        KnownLeading {
            family: fam(Flavor::Ds, 3),
            geometry: LogP3,
            poly: UniPoly::new(vec![
                rat(-1513, 63_787_500),
                rat(6299, 4_252_500_000),
                rat(-6913, 34_020_000_000),
                rat(389, 81_648_000_000),
            ]),
            anchor:
                "m⁹(389/81648000000 d³ − 6913/34020000000 d² + 6299/4252500000 d − 1513/63787500)",
        },
    ]
}

pub fn chern_forms() -> Vec<KnownChernForm> {
    vec![
        KnownChernForm {
            family: fam(Flavor::Ds, 1),
            coeffs: [rat(-1, 120), rat(2, 120), rat(-1, 120)],
            anchor: "m⁵/120 · (−c₁³+2c₁c₂−c₃)",
        },
        KnownChernForm {
            family: fam(Flavor::Ds, 2),
            coeffs: [
                rat(-89, 1_837_080),
                rat(141, 1_837_080),
                rat(-52, 1_837_080),
            ],
            anchor: "−m⁷/1837080 · (89c₁³−141c₁c₂+52c₃)",
        },
        KnownChernForm {
            family: fam(Flavor::Ds, 3),
            coeffs: [
                rat(-29_233, 408_240_000_000),
                rat(551, 5_670_000_000),
                rat(-43, 1_417_500_000),
            ],
            anchor: "−m⁹(43/1417500000 c₃ + 29233/408240000000 c₁³ − 551/5670000000 c₁c₂)",
        },
        KnownChernForm {
            family: fam(Flavor::Gg, 2),
            // 2³·8! = 322560
            coeffs: [rat(-15, 8 * 322_560), rat(3, 322_560), rat(-9, 8 * 322_560)],
            anchor: "m⁸/(2³·8!) · (−15/8 c₁³ + 3c₁c₂ − 9/8 c₃)",
        },
        KnownChernForm {
            family: fam(Flavor::Gg, 3),
            // 6³·11! = 8622028800
            coeffs: [
                rat(-575, 216 * 8_622_028_800),
                rat(395, 108 * 8_622_028_800),
                rat(-251, 216 * 8_622_028_800),
            ],
            anchor: "−m¹¹/(6³·11!) · (575/216 c₁³ − 395/108 c₁c₂ + 251/216 c₃)",
        },
    ]
}

pub fn thresholds() -> Vec<KnownThreshold> {
    vec![
        KnownThreshold {
            family: fam(Flavor::Ds, 3),
            geometry: GeometryKind::HypersurfaceP4,
            threshold: 43,
            anchor: "α(d) > 0 for d ≥ 43",
        },
        KnownThreshold {
            family: fam(Flavor::Gg, 3),
            geometry: GeometryKind::HypersurfaceP4,
            threshold: 45,
            anchor: "positivity for d ≥ 45",
        },
        KnownThreshold {
            family: fam(Flavor::Ds, 3),
            geometry: GeometryKind::LogP3,
            threshold: 34,
            anchor: "α(d) > 0 for d ≥ 34",
        },
    ]
}

pub fn leading_for(family: Family, geometry: GeometryKind) -> Option<KnownLeading> {
    leading_coefficients()
        .into_iter()
        .find(|k| k.family == family && k.geometry == geometry)
}

pub fn chern_form_for(family: Family) -> Option<KnownChernForm> {
    chern_forms().into_iter().find(|k| k.family == family)
}
