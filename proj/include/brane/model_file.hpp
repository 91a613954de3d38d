#pragma once

#include "brane/dga.hpp"

namespace brane {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, const std::string& msg);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_, column_;
};

struct ModelFile {
    std::string name = "V";
    struct Gen {
        std::string name;
        int degree = 0;
    };
    std::vector<Gen> generators;
    AlgPtr algebra;
    std::vector<Element> d;  // per generator, zero when unassigned
    std::optional<int> m;
    std::optional<int> mbar;

    ModelPtr model() const;
};

// file := ["model" name] decl*
// decl := "gen" name int | "d" name "=" expr | "info" ("m" | "mbar") "=" int
// Declarations end at a newline or ';'. '#' starts a comment.
ModelFile parse_model(const std::string& text);
// An expression in the generators of `alg`, e.g. "x*s2_x - 1/2*y".
Element parse_element(const AlgPtr& alg, const std::string& text);
ModelFile read_model_file(const std::string& path);
std::string print_model(const ModelFile& f);
ModelFile model_file_of(const DgaModel& m);

}  // namespace brane
