//! Read each supported benchmark format from inline text.

use amfd::ingest::{parse_instance, InstanceData, InstanceFormat};

const SAMPLES: &[(InstanceFormat, &str)] = &[
    (InstanceFormat::Gset, "4 3\n1 2 1\n2 3 -1\n3 4 1\n"),
    (InstanceFormat::DimacsCol, "c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"),
    (InstanceFormat::DimacsClique { complement: true }, "p edge 3 1\ne 1 2\n"),
    (
        InstanceFormat::Tsplib,
        "NAME: tri\nTYPE: TSP\nDIMENSION: 3\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n1 0 0\n2 3 0\n3 0 4\nEOF\n",
    ),
    (InstanceFormat::Qaplib, "2\n0 4\n4 0\n\n0 1\n1 0\n"),
    (InstanceFormat::Gset, "3 1\n1 2 1\n1 5 1\n"),
];

fn main() {
    for (format, text) in SAMPLES {
        match parse_instance(*format, text) {
            Ok(p) => {
                let what = match &p.data {
                    InstanceData::Graph(g) => format!("graph, {} vertices, {} edges", g.n_vertex(), g.n_edge()),
                    InstanceData::Tsp(t) => format!("{} cities, d(1,3) = {}", t.n_city(), t.d(1, 2)),
                    InstanceData::Qap(q) => format!("{} facilities", q.n()),
                };
                println!("{format:?}: {what}");
            }
            Err(e) => println!("{format:?}: {e}"),
        }
    }
}
