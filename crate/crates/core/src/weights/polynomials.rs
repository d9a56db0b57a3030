//! Closed-form polynomials `P_j(i, n)`, `j = 0..=10`, transcribed term by term.
//!
//! Each polynomial is stored as `scale · P_j(i, n) = Σ sign · coeff · i^a · n^b`.
//! One term in the `j = 8` block has no printed sign; it is stored as
//! [`Sign::Unprinted`] and resolved by certification against the exact
//! Vandermonde inverse (see [`super::certify`]).

/// Sign of a transcribed term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
    /// No sign appears in the source; certification decides.
    Unprinted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Term {
    pub sign: Sign,
    pub coeff: u64,
    pub i_pow: u32,
    pub n_pow: u32,
}

/// `scale · P_j(i, n) = Σ terms`.
#[derive(Clone, Copy, Debug)]
pub struct ClosedFormPoly {
    pub j: usize,
    pub scale: u64,
    pub terms: &'static [Term],
}

const fn t(sign: Sign, coeff: u64, i_pow: u32, n_pow: u32) -> Term {
    Term { sign, coeff, i_pow, n_pow }
}

use Sign::{Minus as M, Plus as P, Unprinted as U};

pub static POLYNOMIALS: [ClosedFormPoly; 11] = [
    ClosedFormPoly { j: 0, scale: 1, terms: &[t(P, 1, 0, 0)] },
    ClosedFormPoly { j: 1, scale: 2, terms: &P1 },
    ClosedFormPoly { j: 2, scale: 24, terms: &P2 },
    ClosedFormPoly { j: 3, scale: 48, terms: &P3 },
    ClosedFormPoly { j: 4, scale: 5760, terms: &P4 },
    ClosedFormPoly { j: 5, scale: 11520, terms: &P5 },
    ClosedFormPoly { j: 6, scale: 2903040, terms: &P6 },
    ClosedFormPoly { j: 7, scale: 5806080, terms: &P7 },
    ClosedFormPoly { j: 8, scale: 1_393_459_200, terms: &P8 },
    ClosedFormPoly { j: 9, scale: 2_786_918_400, terms: &P9 },
    ClosedFormPoly { j: 10, scale: 367_873_228_800, terms: &P10 },
];

#[rustfmt::skip]
static P1: [Term; 3] = [
    t(P, 2, 1, 0), t(M, 3, 0, 1), t(M, 1, 0, 2),
];

#[rustfmt::skip]
static P2: [Term; 8] = [
    t(P, 24, 1, 0), t(P, 24, 2, 0), t(M, 26, 0, 1), t(M, 36, 1, 1), t(P, 9, 0, 2), t(M, 12, 1, 2),
    t(P, 14, 0, 3), t(P, 3, 0, 4),
];

#[rustfmt::skip]
static P3: [Term; 15] = [
    t(P, 48, 1, 0), t(P, 96, 2, 0), t(P, 48, 3, 0), t(M, 48, 0, 1), t(M, 124, 1, 1), t(M, 72, 2, 1),
    t(P, 26, 0, 2), t(M, 6, 1, 2), t(M, 24, 2, 2), t(P, 29, 0, 3), t(P, 28, 1, 3), t(M, 1, 0, 4),
    t(P, 6, 1, 4), t(M, 5, 0, 5), t(M, 1, 0, 6),
];

#[rustfmt::skip]
static P4: [Term; 24] = [
    t(P, 5760, 1, 0), t(P, 17280, 2, 0), t(P, 17280, 3, 0), t(P, 5760, 4, 0), t(M, 5712, 0, 1),
    t(M, 20640, 1, 1), t(M, 23520, 2, 1), t(M, 8640, 3, 1), t(P, 3380, 0, 2), t(P, 2400, 1, 2),
    t(M, 3600, 2, 2), t(M, 2880, 3, 2), t(P, 3660, 0, 3), t(P, 6840, 1, 3), t(P, 3360, 2, 3),
    t(M, 385, 0, 4), t(P, 600, 1, 4), t(P, 720, 2, 4), t(M, 888, 0, 5), t(M, 600, 1, 5),
    t(M, 130, 0, 6), t(M, 120, 1, 6), t(P, 60, 0, 7), t(P, 15, 0, 8),
];

#[rustfmt::skip]
static P5: [Term; 35] = [
    t(P, 11520, 1, 0), t(P, 46080, 2, 0), t(P, 69120, 3, 0), t(P, 46080, 4, 0), t(P, 11520, 5, 0),
    t(M, 11520, 0, 1), t(M, 52704, 1, 1), t(M, 88320, 2, 1), t(M, 64320, 3, 1), t(M, 17280, 4, 1),
    t(P, 6768, 0, 2), t(P, 11560, 1, 2), t(M, 2400, 2, 2), t(M, 12960, 3, 2), t(M, 5760, 4, 2),
    t(P, 7652, 0, 3), t(P, 21000, 1, 3), t(P, 20400, 2, 3), t(P, 6720, 3, 3), t(M, 680, 0, 4),
    t(P, 430, 1, 4), t(P, 2640, 2, 4), t(P, 1440, 3, 4), t(M, 2085, 0, 5), t(M, 2976, 1, 5),
    t(M, 1200, 2, 5), t(M, 395, 0, 6), t(M, 500, 1, 6), t(M, 240, 2, 6), t(P, 198, 0, 7),
    t(P, 120, 1, 7), t(P, 70, 0, 8), t(P, 30, 1, 8), t(M, 5, 0, 9), t(M, 3, 0, 10),
];

#[rustfmt::skip]
static P6: [Term; 48] = [
    t(P, 2903040, 1, 0), t(P, 14515200, 2, 0), t(P, 29030400, 3, 0), t(P, 29030400, 4, 0),
    t(P, 14515200, 5, 0), t(P, 2903040, 6, 0), t(M, 2914560, 0, 1), t(M, 16184448, 1, 1),
    t(M, 35538048, 2, 1), t(M, 38465280, 3, 1), t(M, 20563200, 4, 1), t(M, 4354560, 5, 1),
    t(P, 1667232, 0, 2), t(P, 4618656, 1, 2), t(P, 2308320, 2, 2), t(M, 3870720, 3, 2),
    t(M, 4717440, 4, 2), t(M, 1451520, 5, 2), t(P, 1942136, 0, 3), t(P, 7220304, 1, 3),
    t(P, 10432800, 2, 3), t(P, 6834240, 3, 3), t(P, 1693440, 4, 3), t(M, 97020, 0, 4),
    t(M, 63000, 1, 4), t(P, 773640, 2, 4), t(P, 1028160, 3, 4), t(P, 362880, 4, 4),
    t(M, 523446, 0, 5), t(M, 1275372, 1, 5), t(M, 1052352, 2, 5), t(M, 302400, 3, 5),
    t(M, 146727, 0, 6), t(M, 225540, 1, 6), t(M, 186480, 2, 6), t(M, 60480, 3, 6),
    t(P, 44070, 0, 7), t(P, 80136, 1, 7), t(P, 30240, 2, 7), t(P, 30177, 0, 8), t(P, 25200, 1, 8),
    t(P, 7560, 2, 8), t(P, 406, 0, 9), t(M, 1260, 1, 9), t(M, 2205, 0, 10), t(M, 756, 1, 10),
    t(M, 126, 0, 11), t(P, 63, 0, 12),
];

#[rustfmt::skip]
static P7: [Term; 63] = [
    t(P, 5806080, 1, 0), t(P, 34836480, 2, 0), t(P, 87091200, 3, 0), t(P, 116121600, 4, 0),
    t(P, 87091200, 5, 0), t(P, 34836480, 6, 0), t(P, 5806080, 7, 0), t(M, 5806080, 0, 1),
    t(M, 38198016, 1, 1), t(M, 103444992, 2, 1), t(M, 148006656, 3, 1), t(M, 118056960, 4, 1),
    t(M, 49835520, 5, 1), t(M, 8709120, 6, 1), t(P, 3303936, 0, 2), t(P, 12571776, 1, 2),
    t(P, 13853952, 2, 2), t(M, 3124800, 3, 2), t(M, 17176320, 4, 2), t(M, 12337920, 5, 2),
    t(M, 2903040, 6, 2), t(P, 3783456, 0, 3), t(P, 18324880, 1, 3), t(P, 35306208, 2, 3),
    t(P, 34534080, 3, 3), t(P, 17055360, 4, 3), t(P, 3386880, 5, 3), t(M, 147000, 0, 4),
    t(M, 320040, 1, 4), t(P, 1421280, 2, 4), t(P, 3603600, 3, 4), t(P, 2782080, 4, 4),
    t(P, 725760, 5, 4), t(M, 920780, 0, 5), t(M, 3597636, 1, 5), t(M, 4655448, 2, 5),
    t(M, 2709504, 3, 5), t(M, 604800, 4, 5), t(M, 313950, 0, 6), t(M, 744534, 1, 6),
    t(M, 824040, 2, 6), t(M, 493920, 3, 6), t(M, 120960, 4, 6), t(P, 27573, 0, 7),
    t(P, 248412, 1, 7), t(P, 220752, 2, 7), t(P, 60480, 3, 7), t(P, 65187, 0, 8),
    t(P, 110754, 1, 8), t(P, 65520, 2, 8), t(P, 15120, 3, 8), t(P, 14457, 0, 9), t(M, 1708, 1, 9),
    t(M, 2520, 2, 9), t(M, 5397, 0, 10), t(M, 5922, 1, 10), t(M, 1512, 2, 10), t(M, 1729, 0, 11),
    t(M, 252, 1, 11), t(P, 273, 0, 12), t(P, 126, 1, 12), t(P, 63, 0, 13), t(M, 9, 0, 14),
];

#[rustfmt::skip]
static P8: [Term; 80] = [
    t(P, 1393459200, 1, 0), t(P, 9754214400, 2, 0), t(P, 29262643200, 3, 0),
    t(P, 48771072000, 4, 0), t(P, 48771072000, 5, 0), t(P, 29262643200, 6, 0),
    t(P, 9754214400, 7, 0), t(P, 1393459200, 8, 0), t(M, 1387653120, 0, 1), t(M, 10560983040, 1, 1),
    t(M, 33994321920, 2, 1), t(M, 60348395520, 3, 1), t(M, 63855267840, 4, 1),
    t(M, 40294195200, 5, 1), t(M, 14050713600, 6, 1), t(M, 2090188800, 7, 1), t(P, 807277824, 0, 2),
    t(P, 3810170880, 1, 2), t(P, 6342174720, 2, 2), t(P, 2574996480, 3, 2), t(M, 4872268800, 4, 2),
    t(M, 7083417600, 5, 2), t(M, 3657830400, 6, 2), t(M, 696729600, 7, 2), t(P, 891826560, 0, 3),
    t(P, 5306000640, 1, 3), t(P, 12871461120, 2, 3), t(P, 16761669120, 3, 3),
    t(P, 12381465600, 4, 3), t(P, 4906137600, 5, 3), t(P, 812851200, 6, 3), t(M, 67571600, 0, 4),
    t(M, 112089600, 1, 4), t(P, 264297600, 2, 4), t(P, 1205971200, 3, 4), t(P, 1532563200, 4, 4),
    t(P, 841881600, 5, 4), t(P, 174182400, 6, 4), t(M, 204569280, 0, 5), t(M, 1084419840, 1, 5),
    t(M, 1980740160, 2, 5), t(M, 1767588480, 3, 5), t(M, 795432960, 4, 5), t(M, 145152000, 5, 5),
    t(U, 49594888, 0, 6), t(M, 254036160, 1, 6), t(M, 376457760, 2, 6), t(M, 316310400, 3, 6),
    t(M, 147571200, 4, 6), t(M, 29030400, 5, 6), t(M, 1304520, 0, 7), t(P, 66236400, 1, 7),
    t(P, 112599360, 2, 7), t(P, 67495680, 3, 7), t(P, 14515200, 4, 7), t(P, 6310455, 0, 8),
    t(P, 42225840, 1, 8), t(P, 42305760, 2, 8), t(P, 19353600, 3, 8), t(P, 3628800, 4, 8),
    t(P, 5741280, 0, 9), t(P, 3059760, 1, 9), t(M, 1014720, 2, 9), t(M, 604800, 3, 9),
    t(P, 383204, 0, 10), t(M, 2716560, 1, 10), t(M, 1784160, 2, 10), t(M, 362880, 3, 10),
    t(M, 825840, 0, 11), t(M, 475440, 1, 11), t(M, 60480, 2, 11), t(M, 76790, 0, 12),
    t(P, 95760, 1, 12), t(P, 30240, 2, 12), t(P, 57120, 0, 13), t(P, 15120, 1, 13),
    t(P, 1260, 0, 14), t(M, 2160, 1, 14), t(M, 1800, 0, 15), t(P, 135, 0, 16),
];

#[rustfmt::skip]
static P9: [Term; 99] = [
    t(P, 2786918400, 1, 0), t(P, 22295347200, 2, 0), t(P, 78033715200, 3, 0),
    t(P, 156067430400, 4, 0), t(P, 195084288000, 5, 0), t(P, 156067430400, 6, 0),
    t(P, 78033715200, 7, 0), t(P, 22295347200, 8, 0), t(P, 2786918400, 9, 0),
    t(M, 2786918400, 0, 1), t(M, 23897272320, 1, 1), t(M, 89110609920, 2, 1),
    t(M, 188685434880, 3, 1), t(M, 248407326720, 4, 1), t(M, 208298926080, 5, 1),
    t(M, 108689817600, 6, 1), t(M, 32281804800, 7, 1), t(M, 4180377600, 8, 1),
    t(P, 1642567680, 0, 2), t(P, 9234897408, 1, 2), t(P, 20304691200, 2, 2),
    t(P, 17834342400, 3, 2), t(M, 4594544640, 4, 2), t(M, 23911372800, 5, 2),
    t(M, 21482496000, 6, 2), t(M, 8709120000, 7, 2), t(M, 1393459200, 8, 2), t(P, 1839755520, 0, 3),
    t(P, 12395654400, 1, 3), t(P, 36354923520, 2, 3), t(P, 59266260480, 3, 3),
    t(P, 58286269440, 4, 3), t(P, 34575206400, 5, 3), t(P, 11437977600, 6, 3),
    t(P, 1625702400, 7, 3), t(M, 193851264, 0, 4), t(M, 359322400, 1, 4), t(P, 304416000, 2, 4),
    t(P, 2940537600, 3, 4), t(P, 5477068800, 4, 4), t(P, 4748889600, 5, 4), t(P, 2032128000, 6, 4),
    t(P, 348364800, 7, 4), t(M, 486633040, 0, 5), t(M, 2577978240, 1, 5), t(M, 6130320000, 2, 5),
    t(M, 7496657280, 3, 5), t(M, 5126042880, 4, 5), t(M, 1881169920, 5, 5), t(M, 290304000, 6, 5),
    t(M, 53606320, 0, 6), t(M, 607262096, 1, 6), t(M, 1260987840, 2, 6), t(M, 1385536320, 3, 6),
    t(M, 927763200, 4, 6), t(M, 353203200, 5, 6), t(M, 58060800, 6, 6), t(P, 40638488, 0, 7),
    t(P, 129863760, 1, 7), t(P, 357671520, 2, 7), t(P, 360190080, 3, 7), t(P, 164021760, 4, 7),
    t(P, 29030400, 5, 7), t(M, 6368192, 0, 8), t(P, 97072590, 1, 8), t(P, 169063200, 2, 8),
    t(P, 123318720, 3, 8), t(P, 45964800, 4, 8), t(P, 7257600, 5, 8), t(M, 252565, 0, 9),
    t(P, 17602080, 1, 9), t(P, 4090080, 2, 9), t(M, 3239040, 3, 9), t(M, 1209600, 4, 9),
    t(P, 5530785, 0, 10), t(M, 4666712, 1, 10), t(M, 9001440, 2, 10), t(M, 4294080, 3, 10),
    t(M, 725760, 4, 10), t(M, 77996, 0, 11), t(M, 2602560, 1, 11), t(M, 1071840, 2, 11),
    t(M, 120960, 3, 11), t(M, 873524, 0, 12), t(P, 37940, 1, 12), t(P, 252000, 2, 12),
    t(P, 60480, 3, 12), t(P, 34690, 0, 13), t(P, 144480, 1, 13), t(P, 30240, 2, 13),
    t(P, 61670, 0, 14), t(M, 1800, 1, 14), t(M, 4320, 2, 14), t(M, 6212, 0, 15), t(M, 3600, 1, 15),
    t(M, 1620, 0, 16), t(P, 270, 1, 16), t(P, 315, 0, 17), t(M, 15, 0, 18),
];

#[rustfmt::skip]
static P10: [Term; 120] = [
    t(P, 367873228800, 1, 0), t(P, 3310859059200, 2, 0), t(P, 13243436236800, 3, 0),
    t(P, 30901351219200, 4, 0), t(P, 46352026828800, 5, 0), t(P, 46352026828800, 6, 0),
    t(P, 30901351219200, 7, 0), t(P, 13243436236800, 8, 0), t(P, 3310859059200, 9, 0),
    t(P, 367873228800, 10, 0), t(M, 370660147200, 0, 1), t(M, 3522313175040, 1, 1),
    t(M, 14917040455680, 2, 1), t(M, 36669077913600, 3, 1), t(M, 57696244531200, 4, 1),
    t(M, 60285225369600, 5, 1), t(M, 41842514165760, 6, 1), t(M, 18608254156800, 7, 1),
    t(M, 4813008076800, 8, 1), t(M, 551809843200, 9, 1), t(P, 211314216960, 0, 2),
    t(P, 1435825391616, 1, 2), t(P, 3899225696256, 2, 2), t(P, 5034352435200, 3, 2),
    t(P, 1747653304320, 4, 2), t(M, 3762781102080, 5, 2), t(M, 5991990681600, 6, 2),
    t(M, 3985293312000, 7, 2), t(M, 1333540454400, 8, 2), t(M, 183936614400, 9, 2),
    t(P, 252909144576, 0, 3), t(P, 1879074109440, 1, 3), t(P, 6435076285440, 2, 3),
    t(P, 12621996288000, 3, 3), t(P, 15516933949440, 4, 3), t(P, 12257714810880, 5, 3),
    t(P, 6073740288000, 6, 3), t(P, 1724405760000, 7, 3), t(P, 214592716800, 8, 3),
    t(M, 12322523136, 0, 4), t(M, 73018923648, 1, 4), t(M, 7247644800, 2, 4),
    t(P, 428333875200, 3, 4), t(P, 1111124044800, 4, 4), t(P, 1349826508800, 5, 4),
    t(P, 895094323200, 6, 4), t(P, 314225049600, 7, 4), t(P, 45984153600, 8, 4),
    t(M, 77131325216, 0, 5), t(M, 404528688960, 1, 5), t(M, 1149495367680, 2, 5),
    t(M, 1798761000960, 3, 5), t(M, 1666196421120, 4, 5), t(M, 924952089600, 5, 5),
    t(M, 286634557440, 6, 5), t(M, 38320128000, 7, 5), t(M, 18618732528, 0, 6),
    t(M, 87234630912, 1, 6), t(M, 246608991552, 2, 6), t(M, 349341189120, 3, 6),
    t(M, 305355536640, 4, 6), t(M, 169087564800, 5, 6), t(M, 54286848000, 6, 6),
    t(M, 7664025600, 7, 6), t(P, 13184713168, 0, 7), t(P, 22506296736, 1, 7),
    t(P, 64354656960, 2, 7), t(P, 94757731200, 3, 7), t(P, 69195962880, 4, 7),
    t(P, 25482885120, 5, 7), t(P, 3832012800, 6, 7), t(P, 3778269000, 0, 8),
    t(P, 11972980536, 1, 8), t(P, 35129924280, 2, 8), t(P, 38594413440, 3, 8),
    t(P, 22345424640, 4, 8), t(P, 7025356800, 5, 8), t(P, 958003200, 6, 8), t(M, 2732570786, 0, 9),
    t(P, 2290135980, 1, 9), t(P, 2863365120, 2, 9), t(P, 112337280, 3, 9), t(M, 587220480, 4, 9),
    t(M, 159667200, 5, 9), t(M, 185879199, 0, 10), t(P, 114057636, 1, 10), t(M, 1804196064, 2, 10),
    t(M, 1755008640, 3, 10), t(M, 662618880, 4, 10), t(M, 95800320, 5, 10), t(P, 555823886, 0, 11),
    t(M, 353833392, 1, 11), t(M, 485020800, 2, 11), t(M, 157449600, 3, 11), t(M, 15966720, 4, 11),
    t(M, 37142193, 0, 12), t(M, 110297088, 1, 12), t(P, 38272080, 2, 12), t(P, 41247360, 3, 12),
    t(P, 7983360, 4, 12), t(M, 65980420, 0, 13), t(P, 23650440, 1, 13), t(P, 23063040, 2, 13),
    t(P, 3991680, 3, 13), t(P, 9237162, 0, 14), t(P, 7902840, 1, 14), t(M, 807840, 2, 14),
    t(M, 570240, 3, 14), t(P, 3778940, 0, 15), t(M, 1295184, 1, 15), t(M, 475200, 2, 15),
    t(M, 860970, 0, 16), t(M, 178200, 1, 16), t(P, 35640, 2, 16), t(M, 48378, 0, 17),
    t(P, 41580, 1, 17), t(P, 29205, 0, 18), t(M, 1980, 1, 18), t(M, 2970, 0, 19), t(P, 99, 0, 20),
];
