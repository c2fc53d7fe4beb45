//! Theorem-level index: each stated result and the claims that restate it.

use serde::Serialize;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TheoremEntry {
    pub name: &'static str,
    pub claims: &'static [&'static str],
}

const MANIFEST: &[TheoremEntry] = &[
    TheoremEntry {
        name: "second-order A odd values",
        claims: &["char:A2"],
    },
    TheoremEntry {
        name: "second-order B odd values",
        claims: &["char:B2", "count:B2"],
    },
    TheoremEntry {
        name: "second-order mu mod 4",
        claims: &["R3"],
    },
    TheoremEntry {
        name: "third-order f and phi against partitions",
        claims: &["R1", "R2"],
    },
    TheoremEntry {
        name: "third-order psi odd values",
        claims: &["char:psi3", "liu-hecke"],
    },
    TheoremEntry {
        name: "third-order nu and three-cores",
        claims: &["R4", "char:nu3", "count:nu3"],
    },
    TheoremEntry {
        name: "third-order omega split",
        claims: &["R5-odd", "R5-even", "char:omega3", "count:omega3"],
    },
    TheoremEntry {
        name: "third-order rho recurrence",
        claims: &["R6", "rho3-add"],
    },
    TheoremEntry {
        name: "third-order rho 4n values",
        claims: &["char:rho3-4n", "rho-4n"],
    },
    TheoremEntry {
        name: "third-order rho 2n+1 values",
        claims: &["char:rho3-2n1", "R8", "sigma6-m"],
    },
    TheoremEntry {
        name: "third-order rho almost even",
        claims: &["rho3-almost-even"],
    },
    TheoremEntry {
        name: "third-order rho dissections",
        claims: &[
            "rho3-m",
            "rho-2n",
            "rho-2n1",
            "rho-4n1",
            "rho-4n2",
            "rho-4n3",
            "add-rho4n2",
            "add-rho-4n2-m",
            "rho-add-middle",
            "rho-add-last",
            "rho-last",
            "rho3-16n2",
        ],
    },
    TheoremEntry {
        name: "theta function identities",
        claims: &[
            "jbar-0-1",
            "jbar-0-1-vs-1-4",
            "jbar-1-2",
            "j-1-2",
            "jbar-1-3",
            "j-1-4",
            "j-1-6",
            "jbar-1-6",
        ],
    },
    TheoremEntry {
        name: "known 2-dissections",
        claims: &[
            "J1-inv-square-2dissection",
            "J1-J3cube-2dissection",
            "J3cube-J1-2dissection",
            "J3-J1cube-2dissection",
            "J1J3-2dissection",
        ],
    },
    TheoremEntry {
        name: "new 2-dissection of J1^2/J3^2",
        claims: &["J13-2dissection"],
    },
    TheoremEntry {
        name: "fifth-order f0 and f1 halves",
        claims: &["f0-G-mod2", "f1-H-mod2", "char:f0_5-2n1", "char:f1_5-2n"],
    },
    TheoremEntry {
        name: "fifth-order psi odd values",
        claims: &["char:psi0_5", "char:psi1_5", "psi0-F0", "psi1-F1"],
    },
    TheoremEntry {
        name: "fifth-order F odd values",
        claims: &["R9-F0", "R9-F1", "char:F0_5", "char:F1_5"],
    },
    TheoremEntry {
        name: "fifth-order chi against phi",
        claims: &["R10-chi0", "R10-chi1", "chi0-F0-phi0", "chi1-F1-phi1"],
    },
    TheoremEntry {
        name: "sixth-order phi against partitions",
        claims: &["R11"],
    },
    TheoremEntry {
        name: "sixth-order psi product",
        claims: &["psi6-product-mod2"],
    },
    TheoremEntry {
        name: "sixth-order rho odd values",
        claims: &["char:rho6", "count:rho6"],
    },
    TheoremEntry {
        name: "sixth-order sigma odd values",
        claims: &["char:sigma6"],
    },
    TheoremEntry {
        name: "sixth-order lambda halves",
        claims: &[
            "R13-odd",
            "R13-even",
            "6-lambda-psi-id-1",
            "6-lambda-psi-id-2",
            "6-psi-lambda-Rama-id",
        ],
    },
    TheoremEntry {
        name: "sixth-order phi-minus odd values",
        claims: &["R14", "char:phiminus6"],
    },
    TheoremEntry {
        name: "sixth-order psi-minus odd values",
        claims: &["char:psiminus6"],
    },
    TheoremEntry {
        name: "sixth-order 2mu halves",
        claims: &["R15-even", "R15-odd", "6-phi-mu", "6-mu-2n1"],
    },
    TheoremEntry {
        name: "seventh-order products",
        claims: &[
            "F0_7-product-mod2",
            "F1_7-product-mod2",
            "F2_7-product-mod2",
            "R16-F0",
            "R16-F1",
            "R16-F2",
        ],
    },
    TheoremEntry {
        name: "eighth-order T odd values",
        claims: &["char:T0_8", "char:T1_8"],
    },
    TheoremEntry {
        name: "eighth-order V0 mod 4",
        claims: &["R19", "char:V0_8", "count:V0_8"],
    },
    TheoremEntry {
        name: "eighth-order V1 odd values",
        claims: &["char:V1_8", "R21", "R21-divisor"],
    },
    TheoremEntry {
        name: "eighth-order U splits",
        claims: &[
            "R17-U0",
            "R17-U1",
            "R18-U0",
            "R18-S0",
            "R18-S1",
            "char:U1_8",
        ],
    },
    TheoremEntry {
        name: "tenth-order phi and psi odd values",
        claims: &["char:phi10", "char:psi10", "count:phi10", "count:psi10"],
    },
    TheoremEntry {
        name: "tenth-order X and chi products",
        claims: &["R20-X", "R20-chi"],
    },
];

pub fn manifest() -> &'static [TheoremEntry] {
    MANIFEST
}
