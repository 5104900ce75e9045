#pragma once

#include <stdexcept>
#include <string>

namespace xcover {

// Error categories. The CLI maps these onto process exit codes, so every
// throw site picks the category deliberately.
enum class errc {
  argument,       // bad argument, malformed index, inconsistent parameters
  precondition,   // solver applied to an instance outside its contract
  invariant,      // internal invariant violated: a bug trap, never expected
  cap,            // instance exceeds an exact-search size cap
  parse,          // malformed input file
  generation,     // a randomized generator gave up
  nontermination, // a resampling loop exceeded its iteration budget
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc kind, const std::string& what) { throw error(kind, what); }

}  // namespace xcover

// Invariant checks stay active in release builds: the solvers mirror proofs,
// and a failed check means the proof transcription is wrong, not the input.
#define XCOVER_ASSERT(cond, msg)                                                        \
  do {                                                                                  \
    if (!(cond)) ::xcover::fail(::xcover::errc::invariant, std::string("invariant: ") + (msg)); \
  } while (0)
