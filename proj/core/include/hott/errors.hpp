#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hott {

// Byte range inside a named input. `file` is a display name, not a path that
// must exist on disk.
struct SourceSpan {
  std::string file;
  std::size_t begin = 0;
  std::size_t end = 0;
};

inline std::string show_span(const SourceSpan& s) {
  return s.file + ":" + std::to_string(s.begin) + "-" + std::to_string(s.end);
}

// Surface-syntax failure. `expected` lists the token classes the parser was
// willing to accept at the failure point.
struct ParseError : std::runtime_error {
  SourceSpan span;
  std::string expected;
  ParseError(SourceSpan sp, std::string what_arg, std::string exp = "")
      : std::runtime_error(std::move(what_arg)), span(std::move(sp)), expected(std::move(exp)) {}
};

enum class TypeErrorKind {
  UnboundName,
  TypeMismatch,
  NotAFunction,
  NotAPair,
  NotAType,
  BadEliminator,
  DuplicateName,
  LevelOverflow,
  IllScoped,
  MissingWitness,
  InternalCheckFailed,
  TemplateMismatch,
  FrozenSignature,
  Other,
};

// Checker / translator failure. Kernel-level throws carry no span but may
// carry the offending subterm node; the surface layer maps it back to a span
// before the error reaches the user.
struct TypeError : std::runtime_error {
  TypeErrorKind kind;
  std::optional<SourceSpan> span;
  const void* at = nullptr;  // Term* of the failing subterm when known
  TypeError(TypeErrorKind k, std::string what_arg, const void* at_node = nullptr)
      : std::runtime_error(std::move(what_arg)), kind(k), at(at_node) {}
};

[[noreturn]] inline void fail(TypeErrorKind k, const std::string& msg,
                              const void* at_node = nullptr) {
  throw TypeError(k, msg, at_node);
}

// Programming errors inside the kernel itself (ill-scoped eval input etc).
struct KernelPanic : std::logic_error {
  explicit KernelPanic(const std::string& s) : std::logic_error(s) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& s) : std::runtime_error(s) {}
};

}  // namespace hott
