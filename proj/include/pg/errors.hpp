/*
 * Copyright 2026 The ppsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace pg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A position was declared without any successor (moves must be left-total).
class EmptySuccessorsError : public Error {
public:
    explicit EmptySuccessorsError(long long position)
        : Error("position " + std::to_string(position) + " has no successors"),
          position(position) {}
    long long position;
};

/// A successor index falls outside [0, n) during construction.
class IndexOutOfRangeError : public Error {
public:
    IndexOutOfRangeError(int position, int target)
        : Error("position " + std::to_string(position) + " lists out-of-range successor "
                + std::to_string(target)),
          position(position), target(target) {}
    int position;
    int target;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, int line)
        : Error("parse error at line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

/// A successor refers to an id that no line defines.
class DanglingSuccessorError : public Error {
public:
    DanglingSuccessorError(long long source, long long target)
        : Error("position " + std::to_string(source) + " lists undefined successor id "
                + std::to_string(target)),
          source(source), target(target) {}
    long long source;
    long long target;
};

class DuplicateIdError : public Error {
public:
    explicit DuplicateIdError(long long id)
        : Error("position id " + std::to_string(id) + " defined twice"), id(id) {}
    long long id;
};

/// A set passed to subgame() reaches outside the view.
class NotInViewError : public Error {
public:
    explicit NotInViewError(int position)
        : Error("position " + std::to_string(position) + " is not in the view"),
          position(position) {}
    int position;
};

class EmptyViewError : public Error {
public:
    EmptyViewError() : Error("operation requires a non-empty view") {}
};

/// A promotion source turned out to have no exit moves; the region was
/// closed in the whole game and should never have reached the successor.
class NoExitError : public Error {
public:
    NoExitError() : Error("region has no exit moves into the rest of the game") {}
};

class OracleGuardError : public Error {
public:
    explicit OracleGuardError(const std::string& what) : Error(what) {}
};

class TimeoutError : public Error {
public:
    TimeoutError() : Error("search deadline exceeded") {}
};

/// Iteration cap tripped; indicates a policy bug, not a big input.
class NonTerminationError : public Error {
public:
    NonTerminationError() : Error("search iteration cap exceeded") {}
};

/// Solver entry points reject views containing dead ends.
class MalformedGameError : public Error {
public:
    MalformedGameError() : Error("view is not well-formed (contains a dead end)") {}
};

} // namespace pg
