//! Published reference tables, kept as the printed decimal strings.
//!
//! QV rows flagged `anomalous` are values the original computation itself
//! suspected of numerical error; they are left out of fits unless asked for.

use crate::asymptotics::QvSeries;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VolumeRow {
    pub g: u32,
    pub tetrahedron: &'static str,
    pub manifold: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QvRow {
    pub g: u32,
    pub r: u32,
    pub qv: &'static str,
    pub anomalous: bool,
}

/// Free three-coefficient fit over `5 <= r <= r_max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FreeFitRow {
    pub g: u32,
    pub r_max: u32,
    pub volume: &'static str,
    pub a: &'static str,
    pub b: &'static str,
    pub c: &'static str,
}

/// Fit with the constant pinned to the volume.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixedFitRow {
    pub g: u32,
    pub r_max: u32,
    pub volume: &'static str,
    pub b: &'static str,
    pub c: &'static str,
}

pub const VOLUMES: &[VolumeRow] = &[
    VolumeRow {
        g: 2,
        tetrahedron: "2.007682006682397",
        manifold: "12.046092040094381",
    },
    VolumeRow {
        g: 3,
        tetrahedron: "2.2547631818606026",
        manifold: "18.03810545488482",
    },
    VolumeRow {
        g: 4,
        tetrahedron: "2.3603494908554774",
        manifold: "23.603494908554772",
    },
    VolumeRow {
        g: 5,
        tetrahedron: "2.415787949187158",
        manifold: "28.989455390245897",
    },
    VolumeRow {
        g: 6,
        tetrahedron: "2.448617485457304",
        manifold: "34.28064479640226",
    },
    VolumeRow {
        g: 7,
        tetrahedron: "2.469695490891516",
        manifold: "39.51512785426426",
    },
    VolumeRow {
        g: 8,
        tetrahedron: "2.484045062029212",
        manifold: "44.71281111652581",
    },
    VolumeRow {
        g: 9,
        tetrahedron: "2.494259571737797",
        manifold: "49.88519143475594",
    },
    VolumeRow {
        g: 10,
        tetrahedron: "2.5017908556003303",
        manifold: "55.039398823207264",
    },
    VolumeRow {
        g: 100,
        tetrahedron: "2.5369350366401",
        manifold: "512.4608774013002",
    },
    VolumeRow {
        g: 1000,
        tetrahedron: "2.5373497508910896",
        manifold: "5079.774201283962",
    },
];

macro_rules! qv_rows {
    ($($g:literal, $r:literal, $v:literal, $bad:literal;)*) => {
        &[$(QvRow { g: $g, r: $r, qv: $v, anomalous: $bad }),*]
    };
}

pub const QV: &[QvRow] = qv_rows![
    2, 5, "8.14385123663626", false;
    2, 7, "9.18650442759997", false;
    2, 9, "9.65004427173429", false;
    2, 11, "9.96879239401443", false;
    2, 13, "10.20513879726808", false;
    2, 15, "10.38914324592799", false;
    2, 17, "10.53704472005768", false;
    2, 19, "10.65879117905018", false;
    2, 21, "10.76091340012164", false;
    2, 23, "10.84790597624064", false;
    2, 25, "10.92297357052110", false;
    2, 27, "10.98846715752597", false;
    2, 29, "11.04614827534519", false;
    2, 31, "11.09819658700029", false;
    2, 33, "11.10744853337351", false;
    2, 35, "10.85076510281595", true;
    2, 37, "11.70823932238226", true;
    2, 39, "12.05034471052339", true;
    2, 41, "12.57984278565481", true;
    2, 43, "13.01497045469742", true;
    2, 45, "13.57883304172589", true;
    2, 47, "13.99851452347661", true;
    3, 5, "11.49177317419101", false;
    3, 7, "12.80934693191113", false;
    3, 9, "13.58615197340893", false;
    3, 11, "14.12955507845825", false;
    3, 13, "14.53997951590672", false;
    3, 15, "14.86388896169300", false;
    3, 17, "15.12724763049115", false;
    3, 19, "15.34618602238218", false;
    3, 21, "15.53141775410042", false;
    3, 23, "15.69039789582600", false;
    3, 25, "15.82849506550996", false;
    3, 27, "15.94972272572273", false;
    3, 29, "16.05847664488577", false;
    3, 31, "16.12064941438458", false;
    3, 33, "16.64108419344305", true;
    3, 35, "17.23677472848113", true;
    3, 37, "17.65793100469928", true;
    3, 39, "18.19438875927008", true;
    4, 5, "14.51784517894469", false;
    4, 7, "16.30280237431099", false;
    4, 9, "17.32714285662395", false;
    4, 11, "18.05414567452926", false;
    4, 13, "18.60945703261760", false;
    4, 15, "19.05151621992931", false;
    4, 17, "19.41350816169271", false;
    4, 19, "19.71628402919349", false;
    4, 21, "19.97380655712918", false;
    4, 23, "20.19586182173212", false;
    4, 25, "20.38962564202214", false;
    4, 27, "20.54717170623221", false;
    5, 5, "17.56864290428003", false;
    5, 7, "19.74442367439225", false;
    5, 9, "20.99442151342528", false;
    5, 11, "21.88836919170208", false;
    5, 13, "22.57622952582667", false;
    5, 15, "23.12700521166837", false;
    5, 17, "23.58015181610567", false;
    5, 19, "23.96067740594393", false;
    5, 21, "24.28544874705841", false;
    5, 23, "24.56622464869820", false;
    6, 5, "20.59635740610918", false;
    6, 7, "23.16334886690935", false;
    6, 9, "24.62826235095652", false;
    6, 11, "25.68044858255137", false;
    6, 13, "26.49408736663125", false;
    6, 15, "27.14829604792329", false;
    6, 17, "27.68837084809290", false;
    6, 19, "28.14316996246829", false;
    6, 21, "28.53221301857429", false;
    6, 23, "28.85466729936771", false;
    7, 5, "23.62294303366446", false;
    7, 7, "26.57176683519978", false;
    7, 9, "28.24541308192440", false;
    7, 11, "29.45065948405797", false;
    7, 13, "30.38589828885670", false;
    7, 15, "31.14019388548824", false;
    7, 17, "31.76448809338449", false;
    7, 19, "32.29128792277911", false;
];

pub const FREE_FITS: &[FreeFitRow] = &[
    FreeFitRow {
        g: 2,
        r_max: 33,
        volume: "12.04609204",
        a: "11.86209740",
        b: "-0.83556194",
        c: "-5.31016845",
    },
    FreeFitRow {
        g: 3,
        r_max: 31,
        volume: "18.03810545",
        a: "17.71256898",
        b: "-1.95506206",
        c: "-5.09276097",
    },
    FreeFitRow {
        g: 4,
        r_max: 27,
        volume: "23.60349490",
        a: "22.91592390",
        b: "-2.65679563",
        c: "-6.74587906",
    },
    FreeFitRow {
        g: 5,
        r_max: 23,
        volume: "28.98945539",
        a: "27.83557719",
        b: "-3.23491649",
        c: "-8.35921398",
    },
    FreeFitRow {
        g: 6,
        r_max: 23,
        volume: "34.28064479",
        a: "32.73892860",
        b: "-3.85245863",
        c: "-9.69525194",
    },
    FreeFitRow {
        g: 7,
        r_max: 19,
        volume: "39.51512785",
        a: "37.25645299",
        b: "-4.15342419",
        c: "-12.1205935",
    },
];

/// Full-precision free fits for the two smallest genera.
pub const FREE_FITS_FULL: &[FreeFitRow] = &[
    FreeFitRow {
        g: 2,
        r_max: 33,
        volume: "12.046092040094381",
        a: "11.86209740389381",
        b: "-0.835561949347834",
        c: "-5.310168450722084",
    },
    FreeFitRow {
        g: 3,
        r_max: 31,
        volume: "18.03810545488482",
        a: "17.712568980467715",
        b: "-1.95506206171866",
        c: "-5.092760978446523",
    },
];

pub const FIXED_FITS: &[FixedFitRow] = &[
    FixedFitRow {
        g: 2,
        r_max: 33,
        volume: "12.04609204",
        b: "-1.07486449",
        c: "-4.06269480",
    },
    FixedFitRow {
        g: 3,
        r_max: 31,
        volume: "18.03810545",
        b: "-2.36670389",
        c: "-2.98774665",
    },
    FixedFitRow {
        g: 4,
        r_max: 27,
        volume: "23.60349490",
        b: "-3.47345292",
        c: "-2.75451472",
    },
    FixedFitRow {
        g: 5,
        r_max: 23,
        volume: "28.98945539",
        b: "-4.50837608",
        c: "-2.48549875",
    },
    FixedFitRow {
        g: 6,
        r_max: 23,
        volume: "34.28064479",
        b: "-5.55394983",
        c: "-1.84727854",
    },
    FixedFitRow {
        g: 7,
        r_max: 19,
        volume: "39.51512785",
        b: "-6.43483298",
        c: "-2.38715613",
    },
];

/// The published affine law for `b`: `(slope, intercept, R²)`.
pub const AFFINE_B: (&str, &str, &str) = ("-1.068", "0.9061", "0.9967");

/// Parses a fixture string. Fixture strings are always valid decimals.
pub fn value(s: &str) -> f64 {
    s.parse().expect("fixture strings are decimal literals")
}

pub fn genera() -> Vec<u32> {
    let mut gs: Vec<u32> = QV.iter().map(|row| row.g).collect();
    gs.dedup();
    gs
}

pub fn qv_rows(g: u32, include_anomalous: bool) -> impl Iterator<Item = &'static QvRow> {
    QV.iter()
        .filter(move |row| row.g == g && (include_anomalous || !row.anomalous))
}

pub fn qv_value(g: u32, r: u32) -> Option<&'static QvRow> {
    QV.iter().find(|row| row.g == g && row.r == r)
}

pub fn qv_series(g: u32, include_anomalous: bool) -> Result<QvSeries> {
    let points: Vec<_> = qv_rows(g, include_anomalous)
        .map(|row| (row.r, value(row.qv)))
        .collect();
    if points.is_empty() {
        return Err(Error::NotEnoughData(format!(
            "no reference values for g = {g}"
        )));
    }
    QvSeries::new(g, points)
}

pub fn volume(g: u32) -> Option<&'static VolumeRow> {
    VOLUMES.iter().find(|row| row.g == g)
}

pub fn free_fit(g: u32) -> Option<&'static FreeFitRow> {
    FREE_FITS.iter().find(|row| row.g == g)
}

pub fn fixed_fit(g: u32) -> Option<&'static FixedFitRow> {
    FIXED_FITS.iter().find(|row| row.g == g)
}

/// `(g, b)` pairs of the fixed-volume fits.
pub fn fixed_b_pairs() -> Vec<(u32, f64)> {
    FIXED_FITS.iter().map(|row| (row.g, value(row.b))).collect()
}
