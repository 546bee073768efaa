// Regenerates the shipped fixture files from the built-in constructions.
// Usage: pcp-gen-fixtures <output-directory>

#include <fstream>
#include <iostream>
#include <string>

#include "pcp/fixtures.hpp"
#include "pcp/io.hpp"

using namespace pcp;

namespace {

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
  std::string path = dir + "/" + name;
  std::ofstream out(path);
  if (!out) fail("cannot write " + path);
  out << content;
  std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: pcp-gen-fixtures <output-directory>\n";
    return 2;
  }
  std::string dir = argv[1];
  FieldSpec q = FieldSpec::rationals();

  write_file(dir, "example16.json", serialize_action_instance(fixtures::two_idempotents_z(q)));
  write_file(dir, "example22.json", serialize_action_instance(fixtures::lone_fiber_z(q)));
  write_file(dir, "c3_restriction.json",
             serialize_action_instance(fixtures::c3_restriction(q).action));
  write_file(dir, "dual_numbers.json", serialize_algebra_instance(q, dual_numbers(q)));
  write_file(dir, "upper_triangular.json", serialize_algebra_instance(q, upper_triangular2(q)));
  write_file(dir, "m2q.json", serialize_algebra_instance(q, matrix_algebra(q, 2)));

  // the truncated-window pair: expected to fail verify_enveloping past the wrap
  {
    EnvelopingPair pair = fixtures::window_shift_pair(q, 2);
    write_file(dir, "example28_window.partial.json", serialize_action_instance(pair.partial));
    write_file(dir, "example28_window.global.json", serialize_global_instance(pair.global));
    write_file(dir, "example28_window.pair.json",
               serialize_pair("example28_window.partial.json", "example28_window.global.json",
                              pair.embedding));
  }

  // triangular fixture: (Q, Q, Q) with the sign action on the middle
  {
    auto Q = std::make_shared<StructureAlgebra>(field_algebra(q));
    Bimodule bm;
    bm.left_algebra = Q;
    bm.right_algebra = Q;
    bm.dim = 1;
    bm.left_act.push_back(ExactMatrix::identity(1, q));
    bm.right_act.push_back(ExactMatrix::identity(1, q));
    TriangularAlgebra L = assemble_triangular(bm);
    TwistedPartialAction act;
    act.algebra = L.algebra;
    act.group = make_cyclic(2);
    act.support = {0, 1};
    act.idem[0] = L.algebra->unit;
    act.idem[1] = L.algebra->unit;
    act.alpha.emplace(0, ExactMatrix::identity(3, q));
    ExactMatrix neg = ExactMatrix::identity(3, q);
    neg.at(1, 1) = -Scalar::one(q);
    act.alpha.emplace(1, std::move(neg));
    write_file(dir, "triangular_qqq.json", serialize_triangular_instance(L, act));
  }

  // a broken group table: one entry swapped, so associativity fails
  {
    GroupModel c4 = make_cyclic(4);
    c4.table[1][1] = 3;  // g*g should be g^2
    iodetail::json j;
    j["format"] = "pcp-instance-v1";
    j["field"] = iodetail::field_json(q);
    j["group"] = iodetail::group_json(c4);
    write_file(dir, "broken_group.json", j.dump(2) + "\n");
  }
  return 0;
}
