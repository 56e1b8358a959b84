#pragma once

#include "panelkit/config.hpp"
#include "panelkit/panel.hpp"
#include "panelkit/report.hpp"

namespace panelkit {

// Loads the input CSV (plus optional annual institution data), applies the
// declared log transforms and builds the balanced panel.
Panel ingest_from_config(const PipelineConfig& config);

// Executes the enabled stages in the canonical order
// describe -> kao -> pedroni -> dh -> fmols -> pmg -> ecm, threading the
// same panel through all of them. The first failing stage stops execution
// and is recorded in the bundle (earlier sections stay populated).
ReportBundle run_pipeline(const Panel& panel, const PipelineConfig& config);

}  // namespace panelkit
