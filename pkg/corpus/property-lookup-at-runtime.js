var object = {a : 10, b: 5};
var get = function(property) {
  return object[property]
};
get("a") + get("b"); // answers 15
