#pragma once

#include <string>

#include "miml/data.hpp"

namespace miml {

// Reads a MIML dataset from a relational ARFF file plus a label-list XML
// sidecar. The sidecar defines which header attributes are labels and fixes
// the label column order.
MIMLDataset parse_dataset(const std::string& arff_path, const std::string& labels_xml_path);

// Writes the ARFF + XML pair; the emitted files reparse to a dataset equal to
// ds, preserving label and bag order. Feature values use the shortest decimal
// representation that round-trips exactly.
void write_dataset(const MIMLDataset& ds, const std::string& arff_path,
                   const std::string& labels_xml_path);

} // namespace miml
