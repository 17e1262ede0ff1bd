//! Published datasets: rating matrices and the values printed for them.

use super::{DatasetSource, PublishedConsistency};

pub(super) const RISK: DatasetSource = DatasetSource {
    name: "Risk",
    labels: &[
        "RELY", "DURN", "CPLX", "CPIS", "CADP", "SCAP", "WSZE", "WSKL", "SEXP", "UMTG", "SCED",
        "PMEX", "PDTH", "RISK", "RVOL",
    ],
    ratings: &[
        &[1, 3, 7, 9, 7, 9, 3, 5, 5, 5, 3, 1, 3, 9, 5],
        &[5, 1, 3, 5, 5, 3, 7, 5, 3, 5, 9, 3, 3, 3, 9],
        &[9, 5, 1, 9, 9, 9, 7, 9, 5, 7, 5, 7, 3, 9, 5],
        &[3, 3, 5, 1, 1, 3, 3, 5, 3, 1, 3, 5, 3, 7, 1],
        &[9, 1, 1, 1, 1, 1, 3, 3, 5, 5, 3, 3, 1, 7, 1],
        &[5, 7, 5, 3, 1, 1, 7, 7, 3, 1, 5, 7, 1, 9, 1],
        &[1, 9, 7, 1, 1, 3, 1, 9, 3, 3, 5, 1, 1, 3, 1],
        &[7, 7, 5, 5, 1, 5, 3, 1, 5, 3, 7, 1, 1, 9, 3],
        &[1, 1, 3, 1, 1, 5, 3, 7, 1, 1, 1, 3, 1, 3, 1],
        &[7, 5, 5, 3, 3, 9, 3, 7, 3, 1, 3, 5, 3, 9, 7],
        &[1, 5, 7, 1, 1, 5, 9, 9, 3, 5, 1, 1, 5, 7, 3],
        &[3, 1, 1, 3, 1, 7, 3, 5, 7, 5, 3, 1, 7, 1, 1],
        &[1, 1, 7, 3, 1, 5, 3, 5, 1, 1, 1, 3, 1, 1, 1],
        &[5, 7, 9, 7, 3, 7, 3, 9, 5, 9, 3, 3, 3, 1, 5],
        &[5, 1, 3, 1, 7, 3, 1, 1, 5, 1, 5, 3, 5, 7, 1],
    ],
    printed_ahp: &[
        0.085, 0.083, 0.114, 0.051, 0.05, 0.069, 0.052, 0.069, 0.034, 0.081, 0.068, 0.057, 0.038,
        0.09, 0.058,
    ],
    printed_fuzzy: &[
        0.33, 0.429, 0.33, 0.33, 0.11, 0.11, 0.11, 0.11, 0.2, 0.6, 0.33, 0.143, 0.2, 0.429, 0.11,
    ],
    consistency: PublishedConsistency {
        lambda_max: 61.72,
        ci: 3.34,
        ri: 1.72,
        cr: 1.94,
    },
    trend_row: [2, 2, 3, 3, 4, 0],
    decision: None,
    aliases: &[],
};

pub(super) const CUSTOMER: DatasetSource = DatasetSource {
    name: "Customer",
    labels: &["ENG", "PIS", "RMG", "STF", "SRT"],
    ratings: &[
        &[1, 5, 2, 5, 7],
        &[5, 1, 6, 3, 3],
        &[4, 4, 1, 1, 1],
        &[6, 8, 1, 1, 8],
        &[3, 1, 8, 8, 1],
    ],
    printed_ahp: &[0.211, 0.193, 0.116, 0.25, 0.23],
    printed_fuzzy: &[0.5, 0.38, 0.12, 0.12, 0.33],
    consistency: PublishedConsistency {
        lambda_max: 18.86,
        ci: 3.47,
        ri: 1.19,
        cr: 2.92,
    },
    trend_row: [0, 0, 1, 2, 1, 0],
    decision: Some((0.25, 0.5)),
    aliases: &[("SRF", "SRT")],
};

pub(super) const ORGANIZATION: DatasetSource = DatasetSource {
    name: "Organization",
    labels: &["BPC", "BPN", "EXS", "MSN", "SPN", "STR", "VSN"],
    ratings: &[
        &[1, 4, 2, 5, 1, 2, 5],
        &[5, 1, 6, 7, 3, 5, 8],
        &[4, 4, 1, 1, 5, 3, 1],
        &[6, 8, 1, 1, 5, 1, 3],
        &[3, 1, 8, 8, 1, 6, 4],
        &[5, 6, 6, 7, 3, 1, 9],
        &[4, 4, 3, 1, 5, 4, 1],
    ],
    printed_ahp: &[0.102, 0.184, 0.106, 0.133, 0.164, 0.188, 0.123],
    printed_fuzzy: &[0.33, 0.83, 0.33, 0.14, 0.33, 0.5, 0.33],
    consistency: PublishedConsistency {
        lambda_max: 26.58,
        ci: 3.26,
        ri: 1.41,
        cr: 2.31,
    },
    trend_row: [3, 1, 0, 2, 0, 0],
    decision: Some((0.188, 0.83)),
    aliases: &[],
};

pub(super) const POLICY: DatasetSource = DatasetSource {
    name: "Policy",
    labels: &["AUL", "BCP", "DSP", "PAT", "PPY", "PSD", "RRN"],
    ratings: &[
        &[1, 3, 1, 7, 2, 3, 6],
        &[7, 1, 7, 8, 2, 3, 7],
        &[4, 1, 1, 3, 5, 4, 2],
        &[1, 7, 3, 1, 3, 5, 4],
        &[8, 1, 7, 7, 1, 8, 7],
        &[5, 5, 6, 6, 1, 1, 8],
        &[3, 4, 8, 8, 8, 1, 1],
    ],
    printed_ahp: &[0.108, 0.159, 0.105, 0.131, 0.182, 0.149, 0.166],
    printed_fuzzy: &[0.25, 0.6, 0.14, 0.14, 0.5, 0.12, 0.12],
    consistency: PublishedConsistency {
        lambda_max: 28.88,
        ci: 3.65,
        ri: 1.41,
        cr: 2.58,
    },
    trend_row: [2, 0, 0, 2, 2, 0],
    decision: Some((0.182, 0.6)),
    aliases: &[],
};

pub(super) const PROCESS: DatasetSource = DatasetSource {
    name: "Process",
    labels: &["AUD", "CBP", "CRP", "FRC", "NGP", "POG", "SPL"],
    ratings: &[
        &[1, 4, 6, 9, 3, 2, 7],
        &[9, 1, 7, 1, 3, 3, 6],
        &[8, 2, 1, 4, 2, 4, 3],
        &[4, 5, 1, 1, 5, 5, 5],
        &[4, 2, 5, 6, 1, 7, 8],
        &[1, 6, 7, 6, 9, 1, 1],
        &[7, 3, 7, 5, 1, 2, 1],
    ],
    printed_ahp: &[0.156, 0.141, 0.118, 0.139, 0.162, 0.162, 0.122],
    printed_fuzzy: &[0.44, 0.2, 0.29, 0.25, 0.67, 0.5, 0.12],
    consistency: PublishedConsistency {
        lambda_max: 28.57,
        ci: 3.59,
        ri: 1.41,
        cr: 2.54,
    },
    trend_row: [1, 1, 1, 2, 0, 1],
    decision: Some((0.162, 0.67)),
    aliases: &[],
};

pub(super) const STAFF: DatasetSource = DatasetSource {
    name: "Staff",
    labels: &[
        "CRT", "CTR", "CEG", "EEG", "JQF", "MGP", "PFO", "PRT", "TRP",
    ],
    ratings: &[
        &[1, 3, 7, 5, 1, 2, 6, 3, 7],
        &[4, 1, 5, 6, 8, 7, 8, 5, 1],
        &[8, 2, 1, 4, 2, 4, 3, 1, 9],
        &[4, 5, 1, 1, 5, 5, 5, 4, 5],
        &[5, 5, 3, 1, 1, 8, 4, 7, 6],
        &[1, 6, 7, 6, 9, 1, 1, 7, 2],
        &[9, 9, 7, 1, 3, 3, 1, 6, 2],
        &[1, 4, 6, 9, 3, 2, 7, 1, 3],
        &[4, 3, 6, 7, 8, 3, 6, 4, 1],
    ],
    printed_ahp: &[0.1, 0.128, 0.101, 0.102, 0.118, 0.113, 0.118, 0.101, 0.119],
    printed_fuzzy: &[0.2, 0.33, 0.17, 0.25, 0.2, 0.33, 0.2, 0.29, 0.57],
    consistency: PublishedConsistency {
        lambda_max: 38.62,
        ci: 3.7,
        ri: 1.54,
        cr: 2.4,
    },
    trend_row: [3, 2, 2, 1, 0, 0],
    decision: Some((0.128, 0.57)),
    aliases: &[("MPG", "MGP")],
};

pub(super) const TOOLS: DatasetSource = DatasetSource {
    name: "Tools",
    labels: &[
        "CWA", "CSS", "CMS", "CTL", "RFX", "EXW", "PCD", "PPO", "RQS", "RVA", "RFT", "TPR", "VPS",
        "VRM",
    ],
    ratings: &[
        &[1, 7, 8, 4, 7, 3, 7, 1, 6, 7, 7, 3, 7, 5],
        &[6, 1, 9, 1, 4, 2, 5, 9, 9, 7, 4, 2, 5, 6],
        &[1, 3, 1, 6, 8, 2, 5, 1, 4, 6, 8, 2, 5, 4],
        &[9, 3, 2, 1, 4, 5, 1, 4, 3, 6, 4, 5, 1, 2],
        &[7, 3, 7, 5, 1, 2, 9, 9, 1, 2, 5, 5, 3, 1],
        &[4, 2, 5, 6, 8, 1, 3, 3, 6, 5, 1, 6, 7, 6],
        &[8, 2, 5, 4, 2, 4, 1, 2, 7, 2, 2, 5, 4, 2],
        &[4, 5, 1, 2, 5, 5, 3, 1, 5, 7, 5, 1, 2, 5],
        &[5, 5, 3, 1, 7, 8, 9, 3, 1, 7, 4, 5, 3, 2],
        &[4, 5, 1, 2, 5, 5, 5, 4, 5, 1, 4, 3, 1, 1],
        &[5, 5, 3, 1, 7, 8, 4, 7, 6, 6, 1, 1, 9, 8],
        &[8, 2, 5, 4, 2, 4, 3, 3, 1, 2, 5, 1, 5, 7],
        &[2, 5, 5, 5, 4, 6, 9, 2, 3, 1, 7, 8, 1, 9],
        &[3, 1, 8, 8, 3, 5, 1, 3, 3, 6, 8, 2, 5, 1],
    ],
    printed_ahp: &[
        0.088, 0.083, 0.067, 0.06, 0.074, 0.077, 0.061, 0.061, 0.075, 0.056, 0.086, 0.062, 0.082,
        0.069,
    ],
    printed_fuzzy: &[
        0.25, 0.33, 0.12, 0.2, 0.14, 0.12, 0.22, 0.33, 0.33, 0.17, 0.2, 0.2, 0.2, 0.17,
    ],
    consistency: PublishedConsistency {
        lambda_max: 59.43,
        ci: 3.49,
        ri: 1.7,
        cr: 2.06,
    },
    trend_row: [1, 2, 3, 3, 3, 1],
    decision: Some((0.088, 0.33)),
    aliases: &[],
};

pub(super) const VENDORS: DatasetSource = DatasetSource {
    name: "Vendors",
    labels: &["AVL", "MMS", "VCN", "VQN", "VRN", "VRG"],
    ratings: &[
        &[1, 5, 4, 2, 4, 3],
        &[5, 1, 2, 5, 5, 5],
        &[5, 3, 1, 7, 8, 4],
        &[6, 7, 6, 1, 9, 1],
        &[9, 7, 1, 3, 1, 6],
        &[4, 6, 9, 3, 2, 1],
    ],
    printed_ahp: &[0.127, 0.158, 0.187, 0.185, 0.177, 0.166],
    printed_fuzzy: &[0.33, 0.67, 0.44, 0.33, 0.12, 0.33],
    consistency: PublishedConsistency {
        lambda_max: 25.03,
        ci: 3.81,
        ri: 1.32,
        cr: 2.89,
    },
    trend_row: [1, 1, 1, 2, 0, 0],
    decision: Some((0.187, 0.67)),
    aliases: &[],
};

pub(super) const ALL: [&DatasetSource; 8] = [
    &RISK,
    &CUSTOMER,
    &ORGANIZATION,
    &POLICY,
    &PROCESS,
    &STAFF,
    &TOOLS,
    &VENDORS,
];
