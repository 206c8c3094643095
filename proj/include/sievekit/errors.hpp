// Copyright 2026 The sievekit Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace sievekit {

/// Argument outside the range on which a formula or bound is proved.
class DomainError : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

/// Caller violated an operation's precondition (table too small, reversed range, ...).
class PreconditionError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// A recomputed constant failed the inequality direction it is supposed to satisfy.
class LedgerViolation : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

/// Checkpoint file could not be read or written; the scan can be restarted.
class CheckpointError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

}  // namespace sievekit
