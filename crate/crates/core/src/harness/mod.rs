//! Catalog of concrete groups and extensional checks of the theorem
//! statements on them.

pub mod catalog;
pub mod corpus;
pub mod verify;
