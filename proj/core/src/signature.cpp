#include "hott/signature.hpp"

#include "hott/errors.hpp"

namespace hott {

const SignatureEntry* Signature::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const SignatureEntry& Signature::get(const std::string& name) const {
  const SignatureEntry* e = find(name);
  if (!e) fail(TypeErrorKind::UnboundName, "unknown signature entry '" + name + "'");
  return *e;
}

SignatureEntry& Signature::get_mutable(const std::string& name) {
  auto it = index_.find(name);
  if (it == index_.end())
    fail(TypeErrorKind::UnboundName, "unknown signature entry '" + name + "'");
  return entries_[it->second];
}

void Signature::append(SignatureEntry e, bool allow_internal) {
  if (frozen_ && !allow_internal)
    fail(TypeErrorKind::FrozenSignature, "signature is frozen; cannot add '" + e.name + "'");
  if (index_.count(e.name))
    fail(TypeErrorKind::DuplicateName, "duplicate name '" + e.name + "'");
  index_[e.name] = entries_.size();
  entries_.push_back(std::move(e));
}

}  // namespace hott
