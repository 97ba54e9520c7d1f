//! Applications built on the (k,h)-core decomposition.

mod club;
mod cocktail;
mod coloring;
mod densest;
mod landmarks;

pub use club::{exact_h_club, is_h_club, max_h_club, max_h_club_with, ClubCertificate};
pub use cocktail::{cocktail_party, cocktail_party_with};
pub use coloring::{greedy_distance_h_coloring, Coloring};
pub use densest::{densest_h_core, densest_h_core_with, DensestResult};
pub use landmarks::{
    estimate_distance, select_landmarks, select_landmarks_with, DistanceEstimate, LandmarkIndex,
    LandmarkStrategy,
};
