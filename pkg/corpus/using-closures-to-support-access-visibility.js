var animal = function (spec) {
  // We take either the parameter or the empty object if
  // spec is null
  spec = spec || {};
  var that = {};

  // Initialization
  that.isAnAnimal = true;

  // Private
  var name = spec.name || 'unnamed';

  // Public
  that.getName = function() {
    return name;
  };

  return that;
};

var dog = function (spec) {
  spec = spec || {};
  var that = animal(spec); // makes dog inherits from animal

  that.isADog = true;

  return that;
};

var aDog = dog({name: 'milou'});
aDog.isAnAnimal; // answers true
aDog.isADog;     // answers true
aDog.getName();  // answers 'milou'
aDog.name;       // answers undefined
