//! Library surface of the diag12 command line tool: the rendering layer
//! and its JSON document types, shared with the integration tests.

pub mod render;
