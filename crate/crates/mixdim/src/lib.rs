//! Std companion to `mixdim-core`: the edge-list file format, seeded random
//! graph families, conjecture campaigns and the `mixdim` command line.

pub mod cli;
pub mod format;
pub mod generate;
pub mod lab;
pub mod report;

pub use format::{parse_graph, parse_graph_file, to_edge_list, FormatError};
pub use generate::{random_cactus, random_connected_graph, random_tree, CactusSpec, GenerateError};
pub use lab::{
    check_3connected, evaluate_conjecture, graph_id, run_campaign, CampaignConfig, CampaignSummary,
    ConjectureRecord, EdgeStrategy, LabError, MdimSource, ThreeConnectedCheck,
};
