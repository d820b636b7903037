#pragma once

#include <string>
#include <vector>

namespace qcl {

// One of the six summary tables, regenerated from the live pipeline on every
// call (symbolic rows are solved from probe instances and cross-checked;
// concrete rows run the classification end to end).
//   1: algebra type by class and field      4: the E_n family algebras
//   2: Cl(p,q) type grid, p,q = 0..4        5: the two Lie algebras by class
//   3: Cl(p,q) by (p-q) mod 8 over III      6: diagram identifications
struct TableDoc {
    std::string title;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

TableDoc build_table(int which);

std::string render_table_text(const TableDoc& doc);
std::string render_table_json(const TableDoc& doc);

} // namespace qcl
