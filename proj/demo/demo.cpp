// Walks through the library: external-number arithmetic, a three-valued
// tautology check, supervaluation, and a nonstandard sorites run.
#include <iostream>

#include "soritic/soritic.hpp"

int main() {
  using namespace soritic;

  ExternalNumber a = parse_external("1 + osl");
  ExternalNumber b(1), c(-1);
  std::cout << "a(b+c)  = " << a * (b + c) << "\n";
  std::cout << "ab+ac   = " << a * b + a * c << "\n";
  std::cout << "class of e^(-1) + L(0): " << to_string(classify(parse_external("e^(-1) + L(0)"))) << "\n\n";

  Formula lem = parse_formula("p | ~p");
  std::cout << lem << "  tautology: " << is_tautology_k3(lem) << ", quasi-tautology: " << is_quasi_tautology_k3(lem)
            << "\n";

  PrecisificationFamily family{{2, 3, 4, 5, 6}, "S"};
  Formula boundary = parse_formula("exists n in 1..9. S(n) & ~S(n+1)");
  std::cout << boundary << "  -> " << to_string(eval_super(boundary, family)) << "\n\n";

  SoritesScenario heap;
  heap.name = "heap";
  heap.lo = 1;
  heap.hi = 1000;
  heap.backend = Nonstandard{};
  heap.chain_length = ModelInteger::naive(999);
  std::cout << report_to_text(run_scenario(heap));
}
